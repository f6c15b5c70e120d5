#include "mmv/stabilize.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mmv {

namespace {

// Exact division of p by (g_a - g_b); throws when the division leaves a
// remainder. Horner scheme in g_a with g_b treated as part of the scalars.
GradedPolynomial divide_linear(const GradedPolynomial& p, int slot_a, int slot_b) {
    const VariableSet& vs = p.vars();
    if (p.is_zero()) return p;
    // Layers by the exponent of g_a.
    std::map<int, GradedPolynomial> layer;
    int top = 0;
    for (const auto& [m, c] : p.terms()) {
        int e = m[static_cast<std::size_t>(slot_a)];
        top = std::max(top, e);
        Monomial flat = m;
        flat[static_cast<std::size_t>(slot_a)] = 0;
        auto [it, created] = layer.try_emplace(e, GradedPolynomial::zero(vs));
        it->second.add_term(flat, c);
    }
    auto layer_at = [&](int e) {
        auto it = layer.find(e);
        return it == layer.end() ? GradedPolynomial::zero(vs) : it->second;
    };
    GradedPolynomial gb = GradedPolynomial::variable(vs, vs.name_of(slot_b));
    GradedPolynomial ga = GradedPolynomial::variable(vs, vs.name_of(slot_a));
    std::vector<GradedPolynomial> q(static_cast<std::size_t>(std::max(top, 1)),
                                    GradedPolynomial::zero(vs));
    GradedPolynomial carry = GradedPolynomial::zero(vs);  // q_m while descending
    for (int m = top; m >= 1; --m) {
        GradedPolynomial qm = layer_at(m) + gb * carry;
        q[static_cast<std::size_t>(m - 1)] = qm;
        carry = std::move(qm);
    }
    GradedPolynomial remainder = layer_at(0) + gb * carry;
    if (!remainder.is_zero()) throw std::runtime_error("divide_linear: nonzero remainder");
    GradedPolynomial out = GradedPolynomial::zero(vs);
    for (int m = top - 1; m >= 0; --m) out += q[static_cast<std::size_t>(m)] * ga.pow(m);
    return out;
}

// Shared localization core: Σ_S rename(class_roots, S) * shape(S̄) * (sign
// and Vandermonde complement), divided once by the full Vandermonde. The
// ring carries ring_k scaling variables; when use_d_factors is false the
// complement contributes γ_i^{power_k} instead of Π_j(γ_i - d_j).
GradedPolynomial localize_core(const GradedPolynomial& class_roots_s, int s, int n, int ring_k,
                               bool use_d_factors, int power_k) {
    const int k = ring_k;
    if (s > n) throw std::invalid_argument("localize: s > n");
    VariableSet big = chern_root_vars(n, k);
    auto g = [&](int i) { return GradedPolynomial::variable(big, "g" + std::to_string(i)); };
    auto d = [&](int j) { return GradedPolynomial::variable(big, "d" + std::to_string(j)); };

    GradedPolynomial total = GradedPolynomial::zero(big);
    std::vector<int> subset(static_cast<std::size_t>(s));
    auto process = [&](const std::vector<int>& S) {
        std::vector<bool> in_s(static_cast<std::size_t>(n + 1), false);
        for (int i : S) in_s[static_cast<std::size_t>(i)] = true;
        std::vector<int> comp;
        for (int i = 1; i <= n; ++i)
            if (!in_s[static_cast<std::size_t>(i)]) comp.push_back(i);

        // Rename g_1..g_s to g_{S_1}..g_{S_s}.
        std::map<std::string, GradedPolynomial> rename;
        for (int i = 0; i < s; ++i) rename["g" + std::to_string(i + 1)] = g(S[static_cast<std::size_t>(i)]);
        for (int j = 1; j <= k; ++j) rename["d" + std::to_string(j)] = d(j);
        GradedPolynomial summand = substitute(class_roots_s, rename);

        for (int i : comp) {
            if (use_d_factors) {
                for (int j = 1; j <= k; ++j) summand *= g(i) - d(j);
            } else {
                summand *= g(i).pow(power_k);
            }
        }
        // Multiply by the Vandermonde factors missing from this summand's
        // denominator, with the sign fixing (γ_i - γ_j) vs (γ_min - γ_max).
        long flips = 0;
        for (int i : comp)
            for (int j : S)
                if (i > j) ++flips;
        for (std::size_t a = 0; a < S.size(); ++a)
            for (std::size_t b = a + 1; b < S.size(); ++b) summand *= g(S[a]) - g(S[b]);
        for (std::size_t a = 0; a < comp.size(); ++a)
            for (std::size_t b = a + 1; b < comp.size(); ++b) summand *= g(comp[a]) - g(comp[b]);
        if (flips % 2 == 1) summand *= Rat(-1);
        total += summand;
    };
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == s) {
            process(subset);
            return;
        }
        for (int i = start; i <= n; ++i) {
            subset[static_cast<std::size_t>(pos)] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 1);

    // One exact division per Vandermonde factor.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            total = divide_linear(total, big.index_of("g" + std::to_string(i)),
                                  big.index_of("g" + std::to_string(j)));
    return total;
}

}  // namespace

GradedPolynomial localize_up(const GradedPolynomial& class_s, int s, int n, int k) {
    if (!(class_s.vars() == VariableSet(s, k)))
        throw std::invalid_argument("localize_up: class must live over (s, k)");
    int base_degree = class_s.is_zero() ? 0 : class_s.degree();
    GradedPolynomial roots = to_chern_roots(class_s, s, k);
    GradedPolynomial lifted = localize_core(roots, s, n, k, true, 0);
    GradedPolynomial out = symmetrize_to_chern(lifted, n, k);
    if (!out.is_zero() && out.degree() != base_degree + (k - s) * (n - s))
        throw std::runtime_error("localize_up: degree bookkeeping failed");
    return out;
}

GradedPolynomial localize_up_pure_c(const GradedPolynomial& class_s, int s, int n, int k) {
    if (!(class_s.vars() == chern_vars(s)))
        throw std::invalid_argument("localize_up_pure_c: class must be pure-c over s variables");
    GradedPolynomial roots = to_chern_roots(class_s, s, 0);
    // Work in the d-free root ring; only the k-th powers of the roots enter.
    GradedPolynomial lifted = localize_core(roots, s, n, 0, false, k);
    return symmetrize_to_chern(lifted, n, 0);
}

GradedPolynomial raise_stabilize(const GradedPolynomial& pure_c_class, int s, int n, int k) {
    if (!(pure_c_class.vars() == chern_vars(s)))
        throw std::invalid_argument("raise_stabilize: class must be pure-c over s variables");
    int w = k - s;
    if (width(pure_c_class) > w)
        throw std::invalid_argument("raise_stabilize: width exceeds k - s");
    GradedPolynomial cur = pure_c_class;
    for (int m = s; m < n; ++m) cur = raise_op(cur, m, w);
    return cur;
}

DStabReport dstab_check(const GradedPolynomial& class_n, const GradedPolynomial& class_n_minus_1,
                        int n, int k, int s) {
    if (!(class_n.vars() == VariableSet(n, k)))
        throw std::invalid_argument("dstab_check: first class must live over (n, k)");
    if (!(class_n_minus_1.vars() == VariableSet(n - 1, k)))
        throw std::invalid_argument("dstab_check: second class must live over (n-1, k)");
    DStabReport report;
    GradedPolynomial roots = to_chern_roots(class_n, n, k);
    const VariableSet& big = roots.vars();
    int gn_slot = big.index_of("g" + std::to_string(n));

    std::map<int, GradedPolynomial> layers;  // over chern_root_vars(n-1, k)
    VariableSet small = chern_root_vars(n - 1, k);
    for (const auto& [m, c] : roots.terms()) {
        int e = m[static_cast<std::size_t>(gn_slot)];
        Monomial reduced(m.begin(), m.end());
        reduced.erase(reduced.begin() + gn_slot);
        auto [it, created] = layers.try_emplace(e, GradedPolynomial::zero(small));
        it->second.add_term(reduced, c);
    }
    report.max_gamma_degree = layers.empty() ? -1 : layers.rbegin()->first;
    report.top_degree_ok = report.max_gamma_degree <= k - s;

    GradedPolynomial top = layers.count(k - s) ? layers.at(k - s) : GradedPolynomial::zero(small);
    GradedPolynomial top_chern = symmetrize_to_chern(top, n - 1, k);
    report.coefficient_matches = top_chern == class_n_minus_1;
    return report;
}

}  // namespace mmv
