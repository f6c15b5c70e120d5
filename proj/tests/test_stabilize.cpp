#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mmv/invariants.hpp"
#include "mmv/restriction.hpp"
#include "mmv/solver.hpp"
#include "mmv/stabilize.hpp"

using namespace mmv;
using mmv::testing::make_poly;

namespace {
GradedPolynomial menelaus_star() {
    return make_poly(chern_vars(3), {{3, {{"c1", 2}, {"c2", 1}}},
                                     {-2, {{"c1", 1}, {"c3", 1}}},
                                     {-1, {{"c2", 2}}}});
}
}  // namespace

TEST_CASE("lifting the dense plane configuration to four dimensions") {
    GradedPolynomial one = GradedPolynomial::constant(VariableSet(2, 4), 1);
    GradedPolynomial lifted = localize_up(one, 2, 4, 4);
    CHECK(lifted.is_homogeneous());
    CHECK(lifted.degree() == 4);
    VariableSet vs(4, 4);
    Monomial m(static_cast<std::size_t>(vs.var_count()), 0);
    for (int j = 0; j < 4; ++j) m[static_cast<std::size_t>(4 + j)] = 1;
    CHECK(lifted.coefficient_of(m) == 2);

    // the lifted variety is the rank <= 2 locus of 4x4 matrices, so the lift
    // agrees with both closed forms for it
    CHECK(lifted == schubert_class(FlagSpec{{0, 1, 3, 0, 0}}, 4, 4));
    CHECK(lifted == determinantal_class(4, 4, 2));
}

TEST_CASE("localization with n = s is the identity") {
    GradedPolynomial cls = mmv::testing::menelaus_closed_form();
    CHECK(localize_up(cls, 3, 3, 6) == cls);
}

TEST_CASE("raise-stabilize matches the printed menelaus sequence") {
    for (int n : {4, 5, 6}) {
        GradedPolynomial got = raise_stabilize(menelaus_star(), 3, n, 6);
        GradedPolynomial expect = schur(Partition({n - 1, n - 2, n - 2}), n) * Rat(3) +
                                  schur(Partition({n - 1, n - 1, n - 3}), n) * Rat(2) +
                                  schur(Partition({n, n - 2, n - 3}), n) * Rat(3);
        CHECK(got == expect);
        // equivalently: a (k-s) x (n-s) rectangle on each partition
        SchurExpansion e = schur_expand(got, n);
        REQUIRE(e.coeffs.size() == 3);
        for (const auto& [lambda, coeff] : e.coeffs) CHECK(lambda.num_parts() == 3);
    }
    CHECK(raise_stabilize(menelaus_star(), 3, 3, 6) == menelaus_star());
}

TEST_CASE("raise-stabilize agrees with the localization on pure-c parts") {
    GradedPolynomial cls = mmv::testing::menelaus_closed_form();
    GradedPolynomial lifted = localize_up(cls, 3, 4, 6);
    CHECK(pure_c(lifted) == raise_stabilize(menelaus_star(), 3, 4, 6));
}

TEST_CASE("the lifted menelaus class satisfies the lifted constraints") {
    GradedPolynomial cls = mmv::testing::menelaus_closed_form();
    GradedPolynomial lifted = localize_up(cls, 3, 4, 6);
    CHECK(lifted.degree() == 4 + (6 - 3) * (4 - 3));

    // realization embedded into C^4
    ConfigFile f = mmv::testing::load_config("menelaus");
    std::vector<std::vector<Rat>> cols;
    for (const auto& col : f.config.columns()) {
        std::vector<Rat> padded = col;
        padded.push_back(0);
        cols.push_back(std::move(padded));
    }
    Configuration lifted_config(4, 6, cols, "menelaus#4");
    CHECK(lifted_config.codimension() == 7);

    // kernel constraints of the five tests, now over n = 4
    for (const auto& t : f.tests) CHECK(restriction_annihilates(lifted_config, t, lifted));
    // width bound: k - s = 3 still
    CHECK(width(pure_c(lifted)) <= 3);
    // enumerative zeros of the lifted configuration hold
    for (const auto& [m, coeff] : lifted.terms()) {
        bool pure_d = true;
        for (int v = 0; v < 4; ++v)
            if (m[static_cast<std::size_t>(v)]) pure_d = false;
        if (!pure_d) continue;
        std::vector<int> q(m.begin() + 4, m.end());
        CHECK_FALSE(lifted_config.forced_zero(q));
    }
}

TEST_CASE("gamma-layer comparison between consecutive lifts") {
    GradedPolynomial cls = mmv::testing::menelaus_closed_form();
    GradedPolynomial lifted = localize_up(cls, 3, 4, 6);
    DStabReport rep = dstab_check(lifted, cls, 4, 6, 3);
    CHECK(rep.top_degree_ok);
    CHECK(rep.max_gamma_degree == 3);
    CHECK(rep.coefficient_matches);
    CHECK(rep.pass());

    // schubert classes across n: pad the flag with an empty top level
    GradedPolynomial small = schubert_class(FlagSpec{{0, 3, 0}}, 2, 3);
    GradedPolynomial big = localize_up(small, 2, 3, 3);
    DStabReport rep2 = dstab_check(big, small, 3, 3, 2);
    CHECK(rep2.pass());

    // negative control: an injected high gamma layer must fail
    GradedPolynomial tampered = lifted;
    Monomial m(static_cast<std::size_t>(lifted.vars().var_count()), 0);
    m[3] = 7;  // c4^7: contributes gamma_4 powers above k-s
    tampered.add_term(m, 1);
    DStabReport rep3 = dstab_check(tampered, cls, 4, 6, 3);
    CHECK_FALSE(rep3.pass());
}

TEST_CASE("raising identity against the localization sum on small data") {
    // R iterates on Δ_λ(c_1..c_s) equal the fixed-point sum with γ^k factors
    for (auto [s, n, k] : {std::tuple{2, 3, 4}, {2, 4, 5}, {3, 4, 6}}) {
        for (const auto& lambda : partitions_with_bounded_part(3, s)) {
            if (lambda.num_parts() > k - s) continue;
            GradedPolynomial delta = schur(lambda, s);
            if (delta.is_zero()) continue;
            GradedPolynomial lhs = raise_stabilize(delta, s, n, k);
            GradedPolynomial rhs = localize_up_pure_c(delta, s, n, k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("width violations are rejected") {
    // width 3 > k - s = 2
    GradedPolynomial wide = make_poly(chern_vars(2), {{1, {{"c1", 3}}}});
    CHECK_THROWS(raise_stabilize(wide, 2, 3, 4));
}
