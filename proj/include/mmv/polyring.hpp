// Sparse exact polynomial arithmetic in the graded ring
//   Z[c_1..c_n, d_1..d_k, aux...],   deg c_i = i, deg d_j = deg aux = 1.
// Coefficients are exact rationals. Auxiliary variables cover torus weights,
// free scaling weights and Chern roots; the formal series variable never
// appears as a ring variable (series are handled as coefficient lists).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmv/rational.hpp"

namespace mmv {

struct VariableSet {
    int n_chern = 0;
    int k_scale = 0;
    std::vector<std::string> aux;

    VariableSet() = default;
    VariableSet(int n, int k, std::vector<std::string> aux_names = {});

    int var_count() const { return n_chern + k_scale + static_cast<int>(aux.size()); }
    int degree_of(int slot) const;     // weighted degree of the slot's variable
    std::string name_of(int slot) const;
    int index_of(const std::string& name) const;  // -1 when absent

    bool operator==(const VariableSet& o) const = default;
};

// Dense exponent vector of length VariableSet::var_count().
using Monomial = std::vector<int>;

class GradedPolynomial {
  public:
    GradedPolynomial() = default;  // zero polynomial over the empty ring
    explicit GradedPolynomial(VariableSet vs) : vs_(std::move(vs)) {}

    static GradedPolynomial zero(const VariableSet& vs) { return GradedPolynomial(vs); }
    static GradedPolynomial constant(const VariableSet& vs, const Rat& c);
    static GradedPolynomial variable(const VariableSet& vs, const std::string& name, int exponent = 1);

    const VariableSet& vars() const { return vs_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    int weighted_degree(const Monomial& m) const;
    // Maximum weighted degree over terms; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    // True when only c-variables carry nonzero exponents.
    bool is_pure_c() const;

    void add_term(const Monomial& m, const Rat& coeff);
    Rat coefficient_of(const Monomial& m) const;

    GradedPolynomial operator-() const;
    GradedPolynomial& operator+=(const GradedPolynomial& o);
    GradedPolynomial& operator-=(const GradedPolynomial& o);
    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
    GradedPolynomial& operator*=(const GradedPolynomial& o) { return *this = *this * o; }
    GradedPolynomial& operator*=(const Rat& s);
    friend GradedPolynomial operator*(GradedPolynomial a, const Rat& s) { return a *= s; }
    GradedPolynomial pow(int e) const;

    bool operator==(const GradedPolynomial& o) const { return vs_ == o.vs_ && terms_ == o.terms_; }

    // All coefficients integral?
    bool has_integer_coefficients() const;

    std::string to_text() const;

  private:
    VariableSet vs_;
    std::map<Monomial, Rat> terms_;  // no zero coefficients stored
};

// Coefficients of t^0..t^order of (Σ num[i] t^i) / (Σ den[i] t^i).
// The denominator's constant term must be the constant polynomial 1.
std::vector<GradedPolynomial> series_quotient(const std::vector<GradedPolynomial>& numerator,
                                              const std::vector<GradedPolynomial>& denominator,
                                              int order);

// Ring homomorphism determined by `assignment`. Every variable occurring in p
// must be assigned; images live in a common target variable set.
GradedPolynomial substitute(const GradedPolynomial& p,
                            const std::map<std::string, GradedPolynomial>& assignment);

// Same, with all images constant; returns the rational value.
Rat substitute_numeric(const GradedPolynomial& p, const std::map<std::string, Rat>& assignment);

// Canonical term order: total weighted degree, then exponent vector
// lexicographically (c_1..c_n, d_1..d_k, aux...). Used for printing and the
// JSON wire format.
std::vector<std::pair<Monomial, Rat>> canonical_terms(const GradedPolynomial& p);

}  // namespace mmv
