// Closed-form classes of matrix Schubert varieties (nested-flag
// configurations), their products over column blocks, determinantal-locus
// classes, and planar collinearity classes.
#pragma once

#include <array>
#include <utility>
#include <vector>

#include "mmv/polyring.hpp"
#include "mmv/symfunc.hpp"

namespace mmv {

struct FlagSpec {
    std::vector<long> ell;  // (l_0, ..., l_n), Σ l_i = k

    // Push points down into empty levels until the nonzero entries among
    // l_1..l_n form a prefix; the variety is unchanged.
    FlagSpec normalized() const;
};

// μ has length n, λ is the partition (λ_{n+1-i} = μ_i - i); ℓ is normalized
// first.
std::pair<std::vector<int>, Partition> mu_lambda(const FlagSpec& ell, int n, int k);

// (-1)^{|λ|} det(β^{(n+1-i)}_{λ_i+j-i}) with the β-series
// Π_{j<μ_i}(1+d_j t) / (1 + c_1 t + ... + c_n t^n); homogeneous of degree |λ|.
GradedPolynomial schubert_class(const FlagSpec& ell, int n, int k);

struct ProductFactor {
    FlagSpec ell;
    int first_col = 1, last_col = 0;  // 1-based inclusive column range
};

// Product of per-factor classes with their d-variables shifted into the
// factor's column range; ranges must partition [1..k].
GradedPolynomial product_class(const std::vector<ProductFactor>& factors, int n, int k);

// Class of {rk M <= r} in the n x k matrix space:
// (-1)^{(n-r)(k-r)} det(β_{(k-r)+j-i})_{i,j=1..n-r} with
// β-series Π_j(1+d_j t)/(1+Σ c_i t^i); degree (n-r)(k-r).
GradedPolynomial determinantal_class(int n, int k, int r);

// c_1 - d_a - d_b - d_c for a collinear triple of points in the plane (n=3).
GradedPolynomial collinearity_class(int n, int k, std::array<int, 3> triple);

}  // namespace mmv
