#include "mmv/symfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mmv {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("negative partition part");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

GradedPolynomial SchurExpansion::reassemble() const {
    GradedPolynomial out = GradedPolynomial::zero(chern_vars(n_chern));
    for (const auto& [lambda, c] : coeffs) out += schur(lambda, n_chern) * c;
    return out;
}

VariableSet chern_vars(int n) { return VariableSet(n, 0); }

namespace {

// c_m as a polynomial over chern_vars(n): 1 for m=0, 0 outside [0, n].
GradedPolynomial chern_entry(int m, int n, const VariableSet& vs) {
    if (m == 0) return GradedPolynomial::constant(vs, 1);
    if (m < 0 || m > n) return GradedPolynomial::zero(vs);
    return GradedPolynomial::variable(vs, "c" + std::to_string(m));
}

// Determinant by expansion along the first remaining row, memoized on the
// set of remaining columns.
GradedPolynomial det_recursive(const std::vector<std::vector<GradedPolynomial>>& a,
                               std::size_t row, unsigned colmask,
                               std::map<unsigned, GradedPolynomial>& memo,
                               const VariableSet& vs) {
    if (row == a.size()) return GradedPolynomial::constant(vs, 1);
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    GradedPolynomial out = GradedPolynomial::zero(vs);
    int sign = 1;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (!(colmask & (1u << j))) continue;
        const GradedPolynomial& entry = a[row][j];
        if (!entry.is_zero()) {
            GradedPolynomial sub = det_recursive(a, row + 1, colmask & ~(1u << j), memo, vs);
            sub *= entry;
            if (sign < 0) sub *= Rat(-1);
            out += sub;
        }
        sign = -sign;
    }
    memo.emplace(colmask, out);
    return out;
}

}  // namespace

GradedPolynomial poly_matrix_det(const std::vector<std::vector<GradedPolynomial>>& a,
                                 const VariableSet& vs) {
    if (a.empty()) return GradedPolynomial::constant(vs, 1);
    std::map<unsigned, GradedPolynomial> memo;
    return det_recursive(a, 0, (1u << a.size()) - 1, memo, vs);
}

GradedPolynomial schur(const Partition& lambda, int n) {
    VariableSet vs = chern_vars(n);
    int r = lambda.num_parts();
    std::vector<std::vector<GradedPolynomial>> a(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            a[static_cast<std::size_t>(i)].push_back(chern_entry(lambda.part(i) + j - i, n, vs));
    return poly_matrix_det(a, vs);
}

std::vector<Partition> partitions_with_bounded_part(int m, int max_part) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    if (m >= 0) rec(rec, m, std::max(max_part, 0));
    return out;
}

namespace {

// c-exponent vector of the monomial Π c_i^{a_i} matching a partition whose
// parts are the c-indices with multiplicity.
Monomial monomial_of_partition(const Partition& mu, int n) {
    Monomial m(static_cast<std::size_t>(n), 0);
    for (int p : mu.parts) m[static_cast<std::size_t>(p - 1)] += 1;
    return m;
}

}  // namespace

SchurExpansion schur_expand(const GradedPolynomial& p, int n) {
    if (!p.is_pure_c()) throw std::invalid_argument("schur_expand: input not pure-c");
    if (!p.is_homogeneous()) throw std::invalid_argument("schur_expand: input not homogeneous");
    SchurExpansion out;
    out.n_chern = n;
    if (p.is_zero()) return out;
    if (!(p.vars() == chern_vars(n))) throw std::invalid_argument("schur_expand: wrong ring");
    int m = p.degree();
    if (m == 0) {
        out.coeffs[Partition{}] = p.coefficient_of(Monomial(static_cast<std::size_t>(n), 0));
        return out;
    }
    // Both the monomial basis (c-exponent patterns) and the Schur basis
    // (λ with λ_1 <= n) of the degree-m piece are indexed by partitions of m
    // with largest part <= n.
    std::vector<Partition> idx = partitions_with_bounded_part(m, n);
    std::size_t dim = idx.size();
    std::map<Monomial, std::size_t> mono_index;
    for (std::size_t i = 0; i < dim; ++i) mono_index[monomial_of_partition(idx[i], n)] = i;

    std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(dim, Rat(0)));
    std::vector<Partition> lambdas = idx;
    for (std::size_t j = 0; j < dim; ++j) {
        GradedPolynomial delta = schur(lambdas[j], n);
        for (const auto& [mono, c] : delta.terms()) a[mono_index.at(mono)][j] = c;
    }
    std::vector<Rat> rhs(dim, Rat(0));
    for (const auto& [mono, c] : p.terms()) {
        auto it = mono_index.find(mono);
        if (it == mono_index.end()) throw std::invalid_argument("schur_expand: inhomogeneous term");
        rhs[it->second] = c;
    }
    // Exact Gaussian elimination.
    std::vector<std::size_t> where(dim, SIZE_MAX);
    for (std::size_t col = 0, row = 0; col < dim && row < dim; ++col) {
        std::size_t piv = row;
        while (piv < dim && a[piv][col] == 0) ++piv;
        if (piv == dim) continue;
        std::swap(a[piv], a[row]);
        std::swap(rhs[piv], rhs[row]);
        Rat lead = a[row][col];
        for (std::size_t j = col; j < dim; ++j) a[row][j] /= lead;
        rhs[row] /= lead;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j < dim; ++j) a[i][j] -= f * a[row][j];
            rhs[i] -= f * rhs[row];
        }
        where[col] = row;
        ++row;
    }
    for (std::size_t col = 0; col < dim; ++col) {
        Rat v = where[col] == SIZE_MAX ? Rat(0) : rhs[where[col]];
        if (v != 0) out.coeffs[lambdas[col]] = v;
    }
    return out;
}

int width(const GradedPolynomial& p) {
    if (!p.is_pure_c()) throw std::invalid_argument("width: input not pure-c");
    int w = 0;
    for (const auto& [m, c] : p.terms()) {
        int f = 0;
        for (int i = 0; i < p.vars().n_chern; ++i) f += m[static_cast<std::size_t>(i)];
        w = std::max(w, f);
    }
    return w;
}

GradedPolynomial lower_op(const GradedPolynomial& p, int n, int w) {
    if (!(p.vars() == chern_vars(n + 1))) throw std::invalid_argument("lower_op: expected ring c_1..c_{n+1}");
    if (width(p) > w) throw std::invalid_argument("lower_op: width exceeds w");
    GradedPolynomial out = GradedPolynomial::zero(chern_vars(n));
    for (const auto& [m, c] : p.terms()) {
        int f = 0;
        for (int e : m) f += e;
        if (f < w) continue;
        // c_i factors shift to c_{i-1}; the a_1 factors of c_1 become c_0 = 1.
        Monomial img(static_cast<std::size_t>(n), 0);
        for (int i = 2; i <= n + 1; ++i) img[static_cast<std::size_t>(i - 2)] = m[static_cast<std::size_t>(i - 1)];
        out.add_term(img, c);
    }
    return out;
}

GradedPolynomial raise_op(const GradedPolynomial& p, int n, int w) {
    SchurExpansion e = schur_expand(p, n);
    GradedPolynomial out = GradedPolynomial::zero(chern_vars(n + 1));
    for (const auto& [lambda, c] : e.coeffs) {
        if (lambda.num_parts() > w)
            throw std::invalid_argument("raise_op: expansion has a partition with more than w parts");
        std::vector<int> raised(static_cast<std::size_t>(w), 1);
        for (int i = 0; i < lambda.num_parts(); ++i) raised[static_cast<std::size_t>(i)] = lambda.part(i) + 1;
        out += schur(Partition(raised), n + 1) * c;
    }
    return out;
}

VariableSet chern_root_vars(int n, int k) {
    std::vector<std::string> aux;
    for (int i = 1; i <= n; ++i) aux.push_back("g" + std::to_string(i));
    return VariableSet(0, k, std::move(aux));
}

std::map<std::string, GradedPolynomial> elementary_in_roots(int n, int k) {
    VariableSet target = chern_root_vars(n, k);
    // Build Π (1 + g_i t) coefficients incrementally.
    std::vector<GradedPolynomial> e(1, GradedPolynomial::constant(target, 1));
    for (int i = 1; i <= n; ++i) {
        GradedPolynomial g = GradedPolynomial::variable(target, "g" + std::to_string(i));
        e.push_back(GradedPolynomial::zero(target));
        for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += e[j - 1] * g;
    }
    std::map<std::string, GradedPolynomial> out;
    for (int i = 1; i <= n; ++i) out["c" + std::to_string(i)] = e[static_cast<std::size_t>(i)];
    for (int j = 1; j <= k; ++j)
        out["d" + std::to_string(j)] = GradedPolynomial::variable(target, "d" + std::to_string(j));
    return out;
}

GradedPolynomial to_chern_roots(const GradedPolynomial& p, int n, int k) {
    return substitute(p, elementary_in_roots(n, k));
}

GradedPolynomial symmetrize_to_chern(const GradedPolynomial& p, int n, int k) {
    VariableSet roots = chern_root_vars(n, k);
    if (!(p.vars() == roots)) throw std::invalid_argument("symmetrize_to_chern: wrong ring");
    VariableSet target(n, k);

    // Group terms by their d-exponents; each group must be symmetric in g's.
    std::map<Monomial, std::map<Monomial, Rat>> groups;  // d-part -> g-part -> coeff
    for (const auto& [m, c] : p.terms()) {
        Monomial dpart(m.begin(), m.begin() + k);
        Monomial gpart(m.begin() + k, m.end());
        groups[dpart][gpart] += c;
    }

    auto images = elementary_in_roots(n, k);
    std::vector<std::vector<GradedPolynomial>> epow(static_cast<std::size_t>(n + 1));
    auto e_power = [&](int i, int exp) -> const GradedPolynomial& {
        auto& cache = epow[static_cast<std::size_t>(i)];
        if (cache.empty()) cache.push_back(GradedPolynomial::constant(roots, 1));
        while (static_cast<int>(cache.size()) <= exp)
            cache.push_back(cache.back() * images.at("c" + std::to_string(i)));
        return cache[static_cast<std::size_t>(exp)];
    };

    GradedPolynomial out = GradedPolynomial::zero(target);
    for (auto& [dpart, gterms] : groups) {
        // Subtract the elementary-symmetric expansion of the lex-leading term
        // until nothing is left; the leading exponent of a symmetric
        // polynomial is weakly decreasing.
        while (!gterms.empty()) {
            auto lead = std::prev(gterms.end());
            Monomial e = lead->first;
            Rat a = lead->second;
            for (std::size_t i = 0; i + 1 < e.size(); ++i)
                if (e[i] < e[i + 1])
                    throw std::invalid_argument("symmetrize_to_chern: input not symmetric in the roots");
            Monomial cmono(static_cast<std::size_t>(target.var_count()), 0);
            GradedPolynomial expansion = GradedPolynomial::constant(roots, 1);
            for (int i = 1; i <= n; ++i) {
                int diff = e[static_cast<std::size_t>(i - 1)] - (i < n ? e[static_cast<std::size_t>(i)] : 0);
                cmono[static_cast<std::size_t>(i - 1)] = diff;
                if (diff > 0) expansion *= e_power(i, diff);
            }
            for (int j = 0; j < k; ++j) cmono[static_cast<std::size_t>(n + j)] = dpart[static_cast<std::size_t>(j)];
            out.add_term(cmono, a);
            for (const auto& [gm, gc] : expansion.terms()) {
                Monomial gonly(gm.begin() + k, gm.end());
                Rat& slot = gterms[gonly];
                slot -= a * gc;
                if (slot == 0) gterms.erase(gonly);
            }
        }
    }
    return out;
}

}  // namespace mmv
