#include "mmv/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mmv {

FlagSpec FlagSpec::normalized() const {
    FlagSpec out = *this;
    auto& l = out.ell;
    if (l.empty()) throw std::invalid_argument("empty flag spec");
    for (long v : l)
        if (v < 0) throw std::invalid_argument("negative flag entry");
    // Move one point at a time from the lowest occupied level above the
    // lowest empty level (l_0 counts zero vectors and is left alone).
    for (;;) {
        std::size_t i = 1;
        while (i < l.size() && l[i] != 0) ++i;
        std::size_t j = i;
        while (j < l.size() && l[j] == 0) ++j;
        if (j == l.size()) break;
        --l[j];
        ++l[i];
    }
    return out;
}

std::pair<std::vector<int>, Partition> mu_lambda(const FlagSpec& ell_raw, int n, int k) {
    FlagSpec spec = ell_raw.normalized();
    const auto& l = spec.ell;
    if (static_cast<int>(l.size()) != n + 1) throw std::invalid_argument("flag spec length must be n+1");
    if (std::accumulate(l.begin(), l.end(), 0L) != k)
        throw std::invalid_argument("flag spec entries must sum to k");
    int r = 0;
    while (r + 1 <= n && l[static_cast<std::size_t>(r + 1)] > 0) ++r;
    std::vector<int> mu(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        if (i <= r) {
            long s = 0;
            for (int j = 0; j <= i - 1; ++j) s += l[static_cast<std::size_t>(j)];
            mu[static_cast<std::size_t>(i - 1)] = static_cast<int>(s) + 1;
        } else {
            mu[static_cast<std::size_t>(i - 1)] = k + i - r;
        }
    }
    std::vector<int> lambda(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) lambda[static_cast<std::size_t>(n - i)] = mu[static_cast<std::size_t>(i - 1)] - i;
    return {mu, Partition(lambda)};
}

namespace {

// Coefficient list of Π_{j=1..limit}(1 + d_j t) over the (n, k) ring.
std::vector<GradedPolynomial> d_product_series(const VariableSet& vs, int limit) {
    std::vector<GradedPolynomial> e{GradedPolynomial::constant(vs, 1)};
    for (int j = 1; j <= limit; ++j) {
        GradedPolynomial dj = GradedPolynomial::variable(vs, "d" + std::to_string(j));
        e.push_back(GradedPolynomial::zero(vs));
        for (std::size_t m = e.size() - 1; m >= 1; --m) e[m] += e[m - 1] * dj;
    }
    return e;
}

std::vector<GradedPolynomial> chern_denominator(const VariableSet& vs, int n) {
    std::vector<GradedPolynomial> den{GradedPolynomial::constant(vs, 1)};
    for (int i = 1; i <= n; ++i) den.push_back(GradedPolynomial::variable(vs, "c" + std::to_string(i)));
    return den;
}

}  // namespace

GradedPolynomial schubert_class(const FlagSpec& ell, int n, int k) {
    auto [mu, lambda] = mu_lambda(ell, n, k);
    VariableSet vs(n, k);
    int order = lambda.part(0) + n;
    std::vector<std::vector<GradedPolynomial>> beta;  // beta[i-1] = series for mu_i
    auto den = chern_denominator(vs, n);
    for (int i = 1; i <= n; ++i) {
        int limit = std::min(mu[static_cast<std::size_t>(i - 1)] - 1, k);
        beta.push_back(series_quotient(d_product_series(vs, limit), den, order));
    }
    std::vector<std::vector<GradedPolynomial>> m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int idx = lambda.part(i - 1) + j - i;
            const auto& series = beta[static_cast<std::size_t>(n + 1 - i - 1)];
            m[static_cast<std::size_t>(i - 1)].push_back(
                idx < 0 ? GradedPolynomial::zero(vs) : series[static_cast<std::size_t>(idx)]);
        }
    }
    GradedPolynomial det = poly_matrix_det(m, vs);
    if (lambda.size() % 2 == 1) det *= Rat(-1);
    return det;
}

GradedPolynomial product_class(const std::vector<ProductFactor>& factors, int n, int k) {
    std::vector<bool> covered(static_cast<std::size_t>(k), false);
    for (const auto& f : factors) {
        if (f.first_col < 1 || f.last_col > k || f.first_col > f.last_col)
            throw std::invalid_argument("bad column range");
        for (int c = f.first_col; c <= f.last_col; ++c) {
            if (covered[static_cast<std::size_t>(c - 1)])
                throw std::invalid_argument("overlapping column ranges");
            covered[static_cast<std::size_t>(c - 1)] = true;
        }
    }
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
        throw std::invalid_argument("column ranges must partition 1..k");

    VariableSet vs(n, k);
    GradedPolynomial out = GradedPolynomial::constant(vs, 1);
    for (const auto& f : factors) {
        int kf = f.last_col - f.first_col + 1;
        GradedPolynomial local = schubert_class(f.ell, n, kf);
        // Re-index the factor's d-variables into the global ring.
        GradedPolynomial shifted = GradedPolynomial::zero(vs);
        for (const auto& [mono, c] : local.terms()) {
            Monomial m(static_cast<std::size_t>(vs.var_count()), 0);
            for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = mono[static_cast<std::size_t>(i)];
            for (int j = 0; j < kf; ++j)
                m[static_cast<std::size_t>(n + f.first_col - 1 + j)] = mono[static_cast<std::size_t>(n + j)];
            shifted.add_term(m, c);
        }
        out *= shifted;
    }
    return out;
}

GradedPolynomial determinantal_class(int n, int k, int r) {
    if (r < 0 || r >= std::min(n, k))
        throw std::invalid_argument("determinantal_class: need 0 <= r < min(n,k)");
    VariableSet vs(n, k);
    int size = n - r;
    int order = (k - r) + size;
    auto beta = series_quotient(d_product_series(vs, k), chern_denominator(vs, n), order);
    std::vector<std::vector<GradedPolynomial>> m(static_cast<std::size_t>(size));
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j) {
            int idx = (k - r) + j - i;
            m[static_cast<std::size_t>(i - 1)].push_back(
                idx < 0 ? GradedPolynomial::zero(vs) : beta[static_cast<std::size_t>(idx)]);
        }
    GradedPolynomial det = poly_matrix_det(m, vs);
    if (((n - r) * (k - r)) % 2 == 1) det *= Rat(-1);
    return det;
}

GradedPolynomial collinearity_class(int n, int k, std::array<int, 3> triple) {
    if (n != 3) throw std::invalid_argument("collinearity_class: defined for n = 3 only");
    VariableSet vs(n, k);
    GradedPolynomial out = GradedPolynomial::variable(vs, "c1");
    for (int c : triple) {
        if (c < 1 || c > k) throw std::invalid_argument("collinearity_class: column out of range");
        out -= GradedPolynomial::variable(vs, "d" + std::to_string(c));
    }
    return out;
}

}  // namespace mmv
