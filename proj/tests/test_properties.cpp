// Standalone property suites: ring axioms, Schur round trips, the one-sided
// inverse of the raising operator, homomorphism and degree preservation of
// restriction maps, rank-oracle submodularity, degree-substitution agreement
// on random flag classes, and positivity of the Schur-d expansions of every
// verified class.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "helpers.hpp"
#include "mmv/invariants.hpp"
#include "mmv/restriction.hpp"
#include "mmv/schubert.hpp"
#include "mmv/solver.hpp"
#include "mmv/symfunc.hpp"

using namespace mmv;
using mmv::testing::load_config;
using mmv::testing::random_poly;

TEST_CASE("ring axioms hold on random polynomials") {
    std::mt19937 rng(101);
    for (auto [n, k] : {std::pair{2, 2}, {3, 1}, {1, 4}}) {
        VariableSet vs(n, k);
        for (int trial = 0; trial < 25; ++trial) {
            GradedPolynomial a = random_poly(vs, rng), b = random_poly(vs, rng), c = random_poly(vs, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
        }
    }
}

TEST_CASE("products of homogeneous polynomials are homogeneous of summed degree") {
    std::mt19937 rng(102);
    VariableSet vs(3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        GradedPolynomial a = random_poly(vs, rng), b = random_poly(vs, rng);
        // keep only the top graded pieces
        auto top = [&](const GradedPolynomial& p) {
            GradedPolynomial out(vs);
            if (p.is_zero()) return out;
            int d = p.degree();
            for (const auto& [m, c] : p.terms())
                if (p.weighted_degree(m) == d) out.add_term(m, c);
            return out;
        };
        GradedPolynomial ha = top(a), hb = top(b);
        if (ha.is_zero() || hb.is_zero()) continue;
        GradedPolynomial prod = ha * hb;
        CHECK(prod.is_homogeneous());
        if (!prod.is_zero()) CHECK(prod.degree() == ha.degree() + hb.degree());
    }
}

TEST_CASE("series quotients convolve back to the numerator") {
    std::mt19937 rng(103);
    VariableSet vs(2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<GradedPolynomial> num{random_poly(vs, rng), random_poly(vs, rng), random_poly(vs, rng)};
        std::vector<GradedPolynomial> den{GradedPolynomial::constant(vs, 1), random_poly(vs, rng),
                                          random_poly(vs, rng)};
        int order = 4;
        auto q = series_quotient(num, den, order);
        for (int m = 0; m <= order; ++m) {
            GradedPolynomial conv = GradedPolynomial::zero(vs);
            for (int j = 0; j <= m; ++j) {
                if (j >= static_cast<int>(den.size())) continue;
                conv += den[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(m - j)];
            }
            GradedPolynomial expect = m < static_cast<int>(num.size())
                                          ? num[static_cast<std::size_t>(m)]
                                          : GradedPolynomial::zero(vs);
            CHECK(conv == expect);
        }
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(104);
    VariableSet vs(2, 1);
    VariableSet target(1, 2);
    std::map<std::string, GradedPolynomial> assign;
    assign["c1"] = random_poly(target, rng);
    assign["c2"] = random_poly(target, rng);
    assign["d1"] = random_poly(target, rng);
    for (int trial = 0; trial < 15; ++trial) {
        GradedPolynomial a = random_poly(vs, rng), b = random_poly(vs, rng);
        CHECK(substitute(a * b, assign) == substitute(a, assign) * substitute(b, assign));
        CHECK(substitute(a + b, assign) == substitute(a, assign) + substitute(b, assign));
    }
}

TEST_CASE("schur expansions round trip") {
    std::mt19937 rng(105);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            // random homogeneous pure-c polynomial
            int degree = 1 + static_cast<int>(rng() % 6);
            GradedPolynomial p(chern_vars(n));
            for (const Partition& mu : partitions_with_bounded_part(degree, n)) {
                Monomial m(static_cast<std::size_t>(n), 0);
                for (int part : mu.parts) m[static_cast<std::size_t>(part - 1)] += 1;
                p.add_term(m, static_cast<int>(rng() % 9) - 4);
            }
            if (p.is_zero()) continue;
            CHECK(schur_expand(p, n).reassemble() == p);
        }
    }
    // partitions with more parts than variables have vanishing determinants
    CHECK(schur(Partition({2, 2, 2}), 1).is_zero());
    CHECK(schur(Partition({3, 3, 3, 1}), 2).is_zero());
}

TEST_CASE("lower after raise is the identity; raise makes full width") {
    std::mt19937 rng(106);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int w = 1 + static_cast<int>(rng() % 3);
        int degree = 1 + static_cast<int>(rng() % 4);
        GradedPolynomial p(chern_vars(n));
        for (const Partition& mu : partitions_with_bounded_part(degree, n)) {
            if (mu.num_parts() > w) continue;
            Monomial m(static_cast<std::size_t>(n), 0);
            for (int part : mu.parts) m[static_cast<std::size_t>(part - 1)] += 1;
            if (static_cast<int>(std::accumulate(m.begin(), m.end(), 0)) > w) continue;
            p.add_term(m, static_cast<int>(rng() % 7) - 3);
        }
        if (p.is_zero()) continue;
        GradedPolynomial up = raise_op(p, n, w);
        CHECK(lower_op(up, n, w) == p);
        if (!up.is_zero()) {
            CHECK(width(up) == w);
            CHECK(up.degree() == p.degree() + w);
        }
    }
}

TEST_CASE("restriction maps are degree-preserving ring homomorphisms") {
    std::mt19937 rng(107);
    for (const auto& assign : {std::vector<int>{1, 2, 0, 0, 3}, {1, 1, 2, 0, 2}, {0, 0, 0, 0, 0}}) {
        TestConfiguration d;
        d.assignment = assign;
        RestrictionMap phi = restriction_map(d, 3, 5);
        VariableSet vs(3, 5);
        for (int trial = 0; trial < 10; ++trial) {
            GradedPolynomial a = random_poly(vs, rng), b = random_poly(vs, rng);
            CHECK(apply(phi, a * b) == apply(phi, a) * apply(phi, b));
            CHECK(apply(phi, a + b) == apply(phi, a) + apply(phi, b));
        }
    }
}

TEST_CASE("rank oracles are monotone and submodular on every bundled configuration") {
    for (const char* name :
         {"menelaus", "ceva", "steiner", "pappus", "desargues", "triple_product", "four_generic_2d"}) {
        Configuration c = load_config(name).config;
        const auto& ranks = c.rank_table();
        Subset full = c.full_set();
        for (Subset v = 0; v < full; ++v) {
            for (int j = 0; j < c.k(); ++j) {
                Subset w = v | (Subset(1) << j);
                CHECK(ranks[v] <= ranks[w]);
            }
        }
        std::mt19937 rng(108);
        for (int trial = 0; trial < 300; ++trial) {
            Subset a = static_cast<Subset>(rng()) & full;
            Subset b = static_cast<Subset>(rng()) & full;
            CHECK(ranks[a | b] + ranks[a & b] <= ranks[a] + ranks[b]);
        }
    }
}

TEST_CASE("degree substitutions agree on fifty random flag classes") {
    std::mt19937 rng(109);
    int done = 0;
    while (done < 50) {
        int n = 2 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % 5);
        std::vector<long> ell(static_cast<std::size_t>(n + 1), 0);
        for (int i = 0; i < k; ++i) ell[rng() % static_cast<unsigned long>(n + 1)] += 1;
        GradedPolynomial cls = schubert_class(FlagSpec{ell}, n, k);
        if (cls.is_zero()) continue;
        CHECK_NOTHROW((void)degree_projective(cls, n, k));  // throws on disagreement
        ++done;
    }
}

TEST_CASE("schur-d expansions of verified classes are nonnegative") {
    std::vector<std::pair<GradedPolynomial, std::pair<int, int>>> classes;
    classes.push_back({mmv::testing::menelaus_closed_form(), {3, 6}});
    classes.push_back({collinearity_class(3, 6, {1, 3, 5}) * collinearity_class(3, 6, {2, 3, 4}) *
                           collinearity_class(3, 6, {1, 2, 6}),
                       {3, 6}});
    classes.push_back({determinantal_class(3, 6, 2), {3, 6}});
    classes.push_back({schubert_class(FlagSpec{{0, 1, 3, 0, 0}}, 4, 4), {4, 4}});
    std::vector<ProductFactor> example{{FlagSpec{{0, 3, 0}}, 1, 3},
                                       {FlagSpec{{0, 2, 0}}, 4, 5},
                                       {FlagSpec{{1, 0, 0}}, 6, 6}};
    classes.push_back({product_class(example, 2, 6), {2, 6}});
    for (const auto& [cls, nk] : classes) {
        for (const auto& term : schur_d_expand(cls, nk.first, nk.second)) CHECK(term.coeff >= 0);
    }
}
