// Partitions, Schur polynomials Δ_λ = det(c_{λ_i+j-i}), expansion of pure-c
// polynomials in the Schur basis, the width filtration with its lowering and
// raising operators, and conversion between Chern classes and Chern roots.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "mmv/polyring.hpp"

namespace mmv {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, strictly positive

    Partition() = default;
    explicit Partition(std::vector<int> p);  // validates, strips trailing zeros

    int size() const;  // |λ|
    int num_parts() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i < num_parts() ? parts[static_cast<std::size_t>(i)] : 0; }

    auto operator<=>(const Partition& o) const = default;
    std::string to_string() const;
};

struct SchurExpansion {
    std::map<Partition, Rat> coeffs;
    int n_chern = 0;

    GradedPolynomial reassemble() const;  // Σ coeff · Δ_λ(c_1..c_n)
};

// Pure-c ring with n Chern classes.
VariableSet chern_vars(int n);

// Δ_λ(c_1..c_n); zero when λ_1 > n.
GradedPolynomial schur(const Partition& lambda, int n);

// Unique expansion of a homogeneous pure-c polynomial in the Δ_λ basis
// (λ running over partitions of deg p with λ_1 <= n).
SchurExpansion schur_expand(const GradedPolynomial& p, int n);

// Maximum number of c-factors (with multiplicity) over the terms; width(0)=0.
int width(const GradedPolynomial& p);

// L^n_w: width-w monomials c_{i_1}..c_{i_w} in c_1..c_{n+1} map to
// c_{i_1-1}..c_{i_w-1} (c_0 = 1), lower-width terms map to 0.
GradedPolynomial lower_op(const GradedPolynomial& p, int n, int w);

// R^n_w: Schur expansion with <= w parts, each λ padded to w parts and all
// parts incremented, re-evaluated in c_1..c_{n+1}.
GradedPolynomial raise_op(const GradedPolynomial& p, int n, int w);

// Ring of Chern roots g_1..g_n together with k scaling classes d_1..d_k.
VariableSet chern_root_vars(int n, int k = 0);

// Assignment c_i -> e_i(g_1..g_n), d_j -> d_j into chern_root_vars(n, k).
std::map<std::string, GradedPolynomial> elementary_in_roots(int n, int k = 0);

// Expand a polynomial over (n, k) into Chern roots.
GradedPolynomial to_chern_roots(const GradedPolynomial& p, int n, int k = 0);

// Inverse of to_chern_roots on polynomials symmetric in the g's; throws on
// non-symmetric input.
GradedPolynomial symmetrize_to_chern(const GradedPolynomial& p, int n, int k = 0);

// Partitions of m with every part <= max_part (used by schur_expand and the
// monomial bases; exposed for tests).
std::vector<Partition> partitions_with_bounded_part(int m, int max_part);

// Determinant of a square matrix of polynomials over a common ring.
GradedPolynomial poly_matrix_det(const std::vector<std::vector<GradedPolynomial>>& a,
                                 const VariableSet& vs);

}  // namespace mmv
