#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mmv/polyring.hpp"
#include "mmv/symfunc.hpp"

using namespace mmv;
using mmv::testing::make_poly;

TEST_CASE("addition drops cancelled terms") {
    VariableSet vs(3, 6);
    GradedPolynomial c1 = GradedPolynomial::variable(vs, "c1");
    CHECK((c1 + (-c1)).is_zero());
    GradedPolynomial d1d2 = make_poly(vs, {{1, {{"d1", 1}, {"d2", 1}}}});
    CHECK(d1d2 + d1d2 == make_poly(vs, {{2, {{"d1", 1}, {"d2", 1}}}}));
}

TEST_CASE("schur pieces sum to the menelaus pure-c class") {
    GradedPolynomial sum = schur(Partition({2, 1, 1}), 3) * Rat(3);
    sum += schur(Partition({2, 2}), 3) * Rat(2);
    sum += schur(Partition({3, 1}), 3) * Rat(3);
    GradedPolynomial expected = make_poly(chern_vars(3), {{3, {{"c1", 2}, {"c2", 1}}},
                                                          {-2, {{"c1", 1}, {"c3", 1}}},
                                                          {-1, {{"c2", 2}}}});
    CHECK(sum == expected);
}

TEST_CASE("multiplication matches a hand expansion") {
    VariableSet vs(2, 6);
    GradedPolynomial f1 = make_poly(vs, {{1, {{"c1", 1}}}, {-1, {{"d4", 1}}}, {-1, {{"d5", 1}}}});
    GradedPolynomial f2 = make_poly(
        vs, {{1, {{"d6", 2}}}, {-1, {{"c1", 1}, {"d6", 1}}}, {1, {{"c2", 1}}}});
    GradedPolynomial expected = make_poly(
        vs, {{1, {{"c1", 1}, {"d6", 2}}},   {-1, {{"c1", 2}, {"d6", 1}}},
             {1, {{"c1", 1}, {"c2", 1}}},   {-1, {{"d4", 1}, {"d6", 2}}},
             {1, {{"c1", 1}, {"d4", 1}, {"d6", 1}}}, {-1, {{"c2", 1}, {"d4", 1}}},
             {-1, {{"d5", 1}, {"d6", 2}}},  {1, {{"c1", 1}, {"d5", 1}, {"d6", 1}}},
             {-1, {{"c2", 1}, {"d5", 1}}}});
    CHECK(f1 * f2 == expected);
    GradedPolynomial one = GradedPolynomial::constant(vs, 1);
    CHECK(f1 * one == f1);
}

TEST_CASE("menelaus collinearity product is integral homogeneous of degree 4") {
    VariableSet vs(3, 6);
    auto lin = [&](std::vector<int> cols) {
        GradedPolynomial p = GradedPolynomial::variable(vs, "c1");
        for (int c : cols) p -= GradedPolynomial::variable(vs, "d" + std::to_string(c));
        return p;
    };
    GradedPolynomial prod = lin({1, 2, 6}) * lin({1, 3, 5}) * lin({2, 3, 4}) * lin({4, 5, 6});
    CHECK(prod.is_homogeneous());
    CHECK(prod.degree() == 4);
    CHECK(prod.has_integer_coefficients());
}

TEST_CASE("series quotient basics") {
    VariableSet vs(3, 6);
    GradedPolynomial one = GradedPolynomial::constant(vs, 1);
    GradedPolynomial c1 = GradedPolynomial::variable(vs, "c1");
    auto geom = series_quotient({one}, {one, c1}, 2);
    REQUIRE(geom.size() == 3);
    CHECK(geom[0] == one);
    CHECK(geom[1] == -c1);
    CHECK(geom[2] == c1 * c1);

    GradedPolynomial d1 = GradedPolynomial::variable(vs, "d1");
    auto cancel = series_quotient({one, d1}, {one, d1}, 3);
    CHECK(cancel[0] == one);
    CHECK(cancel[1].is_zero());
    CHECK(cancel[2].is_zero());
    CHECK(cancel[3].is_zero());

    CHECK_THROWS(series_quotient({one}, {c1, one}, 1));
}

TEST_CASE("substitution at constants and the zero assignment") {
    VariableSet vs(2, 1);
    GradedPolynomial p =
        make_poly(vs, {{1, {{"d1", 2}}}, {-1, {{"c1", 1}, {"d1", 1}}}, {1, {{"c2", 1}}}});
    std::map<std::string, Rat> zero{{"c1", 0}, {"c2", 0}, {"d1", 0}};
    CHECK(substitute_numeric(p, zero) == 0);
    std::map<std::string, Rat> some{{"c1", 2}, {"c2", 3}, {"d1", Rat(1, 2)}};
    CHECK(substitute_numeric(p, some) == Rat(1, 4) - 1 + 3);
    std::map<std::string, Rat> missing{{"c1", 2}};
    CHECK_THROWS(substitute_numeric(p, missing));
}

TEST_CASE("coefficient extraction from the example product") {
    VariableSet vs(2, 6);
    GradedPolynomial factor1 = make_poly(
        vs, {{1, {{"d1", 1}, {"d2", 1}}}, {1, {{"d1", 1}, {"d3", 1}}}, {1, {{"d2", 1}, {"d3", 1}}},
             {-1, {{"c1", 1}, {"d1", 1}}}, {-1, {{"c1", 1}, {"d2", 1}}}, {-1, {{"c1", 1}, {"d3", 1}}},
             {1, {{"c1", 2}}}, {-1, {{"c2", 1}}}});
    GradedPolynomial factor2 = make_poly(vs, {{1, {{"c1", 1}}}, {-1, {{"d4", 1}}}, {-1, {{"d5", 1}}}});
    GradedPolynomial factor3 =
        make_poly(vs, {{1, {{"d6", 2}}}, {-1, {{"c1", 1}, {"d6", 1}}}, {1, {{"c2", 1}}}});
    GradedPolynomial full = factor1 * factor2 * factor3;

    // coefficient of d1 d2 c1 d6^2: the d1d2 term times c1 times d6^2
    Monomial m(static_cast<std::size_t>(vs.var_count()), 0);
    m[static_cast<std::size_t>(vs.index_of("c1"))] = 1;
    m[static_cast<std::size_t>(vs.index_of("d1"))] = 1;
    m[static_cast<std::size_t>(vs.index_of("d2"))] = 1;
    m[static_cast<std::size_t>(vs.index_of("d6"))] = 2;
    CHECK(full.coefficient_of(m) == 1);

    Monomial absent(static_cast<std::size_t>(vs.var_count()), 0);
    absent[static_cast<std::size_t>(vs.index_of("d4"))] = 5;
    CHECK(full.coefficient_of(absent) == 0);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    VariableSet vs(2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        GradedPolynomial a = mmv::testing::random_poly(vs, rng);
        GradedPolynomial b = mmv::testing::random_poly(vs, rng);
        GradedPolynomial c = mmv::testing::random_poly(vs, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("canonical json order is stable") {
    VariableSet vs(2, 2);
    GradedPolynomial p = make_poly(vs, {{2, {{"d1", 1}, {"d2", 1}}},
                                        {1, {{"c2", 1}}},
                                        {-3, {{"c1", 2}}},
                                        {5, {{"c1", 1}, {"d1", 1}}}});
    auto terms = canonical_terms(p);
    REQUIRE(terms.size() == 4);
    // total degree 2 everywhere; lex ascending on (c1, c2, d1, d2)
    CHECK(terms[0].first == Monomial{0, 0, 1, 1});
    CHECK(terms[1].first == Monomial{0, 1, 0, 0});
    CHECK(terms[2].first == Monomial{1, 0, 1, 0});
    CHECK(terms[3].first == Monomial{2, 0, 0, 0});
}
