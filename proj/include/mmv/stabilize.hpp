// Relations between the classes of a configuration viewed in different
// ambient dimensions: the localization lift over s-subsets of [n], the
// raising-operator form of the pure-c stabilization, and the check that the
// top Chern-root layer of the lifted class reproduces the smaller class.
#pragma once

#include "mmv/polyring.hpp"
#include "mmv/symfunc.hpp"

namespace mmv {

// Lift a class over (s, k) to (n, k): sum over s-subsets S of [n] of
// class(γ_S) Π_{i∉S} Π_j (γ_i - d_j) / Π_{i∉S} Π_{j∈S} (γ_i - γ_j),
// cleared to the common Vandermonde denominator and divided exactly.
// Degree grows by (k-s)(n-s).
GradedPolynomial localize_up(const GradedPolynomial& class_s, int s, int n, int k);

// Same localization sum with Π_{i∉S} γ_i^k in place of the d-factors
// (the pure-c combinatorial identity's right-hand side).
GradedPolynomial localize_up_pure_c(const GradedPolynomial& class_s, int s, int n, int k);

// Iterated raising: R^{n-1}_{k-s} ∘ ... ∘ R^s_{k-s} on a width <= k-s
// pure-c class over c_1..c_s; equals adding a (k-s) x (n-s) rectangle to
// every partition of the Schur expansion.
GradedPolynomial raise_stabilize(const GradedPolynomial& pure_c_class, int s, int n, int k);

struct DStabReport {
    bool top_degree_ok = false;    // no γ_n power above k-s
    int max_gamma_degree = -1;
    bool coefficient_matches = false;  // γ_n^{k-s} layer equals the smaller class
    bool pass() const { return top_degree_ok && coefficient_matches; }
};

// Expand class_n in powers of the last Chern root and compare the top layer
// against class_{n-1} (the proportionality constant is 1).
DStabReport dstab_check(const GradedPolynomial& class_n, const GradedPolynomial& class_n_minus_1,
                        int n, int k, int s);

}  // namespace mmv
