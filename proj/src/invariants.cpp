#include "mmv/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mmv {

Int gw(const GradedPolynomial& cls, const std::vector<int>& q, int codim) {
    const VariableSet& vs = cls.vars();
    int n = vs.n_chern, k = vs.k_scale;
    if (static_cast<int>(q.size()) != k) throw std::invalid_argument("gw: q length mismatch");
    int total = 0;
    for (int qi : q) total += qi;
    if (total != codim) throw std::invalid_argument("gw: sum of q must equal codim");
    Monomial m(static_cast<std::size_t>(vs.var_count()), 0);
    for (int j = 0; j < k; ++j) m[static_cast<std::size_t>(n + j)] = q[static_cast<std::size_t>(j)];
    Rat coeff = cls.coefficient_of(m);
    Rat value = codim % 2 == 0 ? coeff : -coeff;
    if (!is_integer(value) || value < 0)
        throw std::runtime_error("gw: count is not a nonnegative integer (wrong class?)");
    return to_integer(value);
}

Int degree_projective(const GradedPolynomial& cls, int n, int k) {
    if (!cls.is_homogeneous()) throw std::invalid_argument("degree_projective: class not homogeneous");
    std::map<std::string, Rat> sub1, sub2;
    for (int i = 1; i <= n; ++i) {
        sub1["c" + std::to_string(i)] = Rat(binomial(n, i));
        sub2["c" + std::to_string(i)] = 0;
    }
    for (int j = 1; j <= k; ++j) {
        sub1["d" + std::to_string(j)] = 0;
        sub2["d" + std::to_string(j)] = -1;
    }
    Rat a = substitute_numeric(cls, sub1);
    Rat b = substitute_numeric(cls, sub2);
    if (a != b)
        throw std::runtime_error("degree_projective: substitutions disagree (" + rat_to_string(a) +
                                 " vs " + rat_to_string(b) + ")");
    return to_integer(a);
}

GradedPolynomial pure_c(const GradedPolynomial& cls) {
    const VariableSet& vs = cls.vars();
    int n = vs.n_chern, k = vs.k_scale;
    GradedPolynomial out = GradedPolynomial::zero(chern_vars(n));
    for (const auto& [m, c] : cls.terms()) {
        bool pure = true;
        for (int j = 0; j < k + static_cast<int>(vs.aux.size()); ++j)
            if (m[static_cast<std::size_t>(n + j)]) pure = false;
        if (!pure) continue;
        Monomial cm(m.begin(), m.begin() + n);
        out.add_term(cm, c);
    }
    return out;
}

std::vector<SchurDTerm> schur_d_expand(const GradedPolynomial& cls, int n, int k) {
    // Group by d-exponent; each pure-c coefficient expands uniquely in Δ_mu.
    std::map<std::vector<int>, GradedPolynomial> groups;
    for (const auto& [m, c] : cls.terms()) {
        std::vector<int> w(m.begin() + n, m.begin() + n + k);
        Monomial cm(m.begin(), m.begin() + n);
        auto [it, created] = groups.try_emplace(w, GradedPolynomial::zero(chern_vars(n)));
        it->second.add_term(cm, c);
    }
    std::vector<SchurDTerm> out;
    for (const auto& [w, cpoly] : groups) {
        int wsum = 0;
        for (int wi : w) wsum += wi;
        Rat sign = wsum % 2 == 0 ? 1 : -1;
        SchurExpansion e = schur_expand(cpoly, n);
        for (const auto& [mu, a] : e.coeffs) {
            if (a == 0) continue;
            out.push_back({mu, w, a * sign});
        }
    }
    return out;
}

HierarchyVerdict hierarchy_probe(const Configuration& c, const GradedPolynomial& cls,
                                 const TestConfiguration& d) {
    if (cls.is_zero()) return HierarchyVerdict::Inconclusive;
    return restriction_annihilates(c, d, cls) ? HierarchyVerdict::Inconclusive
                                              : HierarchyVerdict::CertifiedContained;
}

void AuditReport::add(const std::string& name, bool pass, const std::string& detail) {
    entries.push_back({name, pass, detail});
    if (!pass) all_pass = false;
}

AuditReport verify_class(const Configuration& c, const GradedPolynomial& cls,
                         const std::vector<TestConfiguration>& tests,
                         const std::vector<KnownCount>& known) {
    AuditReport report;
    const int n = c.n(), k = c.k();
    const int codim = c.codimension();

    bool homog = cls.is_homogeneous() && (cls.is_zero() || cls.degree() == codim);
    report.add("homogeneous_of_codim_degree", homog,
               "degree " + std::to_string(cls.degree()) + " vs codim " + std::to_string(codim));
    report.add("integer_coefficients", cls.has_integer_coefficients());

    try {
        Int deg = degree_projective(cls, n, k);
        report.add("degree_substitutions_agree", true, deg.get_str());
    } catch (const std::exception& e) {
        report.add("degree_substitutions_agree", false, e.what());
    }

    // Schur-d expansion must have nonnegative coefficients.
    try {
        auto terms = schur_d_expand(cls, n, k);
        bool nonneg = std::all_of(terms.begin(), terms.end(),
                                  [](const SchurDTerm& t) { return t.coeff >= 0; });
        report.add("schur_d_nonnegative", nonneg);
    } catch (const std::exception& e) {
        report.add("schur_d_nonnegative", false, e.what());
    }

    // Width bound on the pure-c part.
    int bound = k - c.spanning_rank();
    int w = width(pure_c(cls));
    report.add("width_bound", w <= bound,
               "width " + std::to_string(w) + " <= " + std::to_string(bound));

    // Pure-d coefficients: correct sign, integer counts, and zero exactly on
    // rank-forced queries (unexplained zeros are reported, not failed).
    bool signs_ok = true, forced_ok = true;
    for (const auto& [m, coeff] : cls.terms()) {
        bool pure_d = true;
        for (int v = 0; v < n; ++v)
            if (m[static_cast<std::size_t>(v)]) pure_d = false;
        if (!pure_d) continue;
        std::vector<int> q(m.begin() + n, m.begin() + n + k);
        Rat count = codim % 2 == 0 ? coeff : -coeff;
        if (!is_integer(count) || count < 0) signs_ok = false;
        if (c.forced_zero(q)) forced_ok = false;  // forced slot carries a nonzero value
    }
    report.add("count_signs_nonnegative", signs_ok);
    report.add("forced_zero_consistency", forced_ok);
    // The reverse direction: zero coefficients that rank arguments do not
    // explain.
    if (!cls.is_zero() && cls.degree() == codim) {
        MonomialBasis basis = monomial_basis(n, k, codim);
        for (PackedMono pm : basis.monos) {
            bool pure_d = true;
            for (int v = 0; v < n; ++v)
                if ((pm >> (4 * v)) & 0xf) pure_d = false;
            if (!pure_d) continue;
            Monomial m = unpack_monomial(pm, n, k);
            if (cls.coefficient_of(m) != 0) continue;
            std::vector<int> q(m.begin() + n, m.end());
            if (!c.forced_zero(q)) report.unexplained_zeros.push_back(std::move(q));
        }
    }

    bool kernels_ok = true;
    std::string failing;
    for (const auto& t : tests) {
        if (!restriction_annihilates(c, t, cls)) {
            kernels_ok = false;
            failing += t.display() + " ";
        }
    }
    report.add("kernel_vanishing", kernels_ok, failing);

    bool counts_ok = true;
    for (const auto& kc : known) {
        Monomial m(static_cast<std::size_t>(n + k), 0);
        for (int j = 0; j < k; ++j) m[static_cast<std::size_t>(n + j)] = kc.q[static_cast<std::size_t>(j)];
        Rat expect = Rat(codim % 2 == 0 ? kc.count : -kc.count);
        if (cls.coefficient_of(m) != expect) counts_ok = false;
    }
    report.add("known_counts_match", counts_ok);

    return report;
}

}  // namespace mmv
