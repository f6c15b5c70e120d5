#include "mmv/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mmv {

VariableSet::VariableSet(int n, int k, std::vector<std::string> aux_names)
    : n_chern(n), k_scale(k), aux(std::move(aux_names)) {
    if (n < 0 || k < 0) throw std::invalid_argument("negative variable counts");
    std::vector<std::string> seen;
    for (int s = 0; s < var_count(); ++s) seen.push_back(name_of(s));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("duplicate variable names");
}

int VariableSet::degree_of(int slot) const {
    if (slot < n_chern) return slot + 1;
    return 1;
}

std::string VariableSet::name_of(int slot) const {
    if (slot < 0 || slot >= var_count()) throw std::out_of_range("variable slot");
    if (slot < n_chern) return "c" + std::to_string(slot + 1);
    slot -= n_chern;
    if (slot < k_scale) return "d" + std::to_string(slot + 1);
    return aux[static_cast<std::size_t>(slot - k_scale)];
}

int VariableSet::index_of(const std::string& name) const {
    if (name.size() >= 2 && (name[0] == 'c' || name[0] == 'd')) {
        bool digits = std::all_of(name.begin() + 1, name.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
        if (digits) {
            int idx = std::stoi(name.substr(1)) - 1;
            if (name[0] == 'c' && idx >= 0 && idx < n_chern) return idx;
            if (name[0] == 'd' && idx >= 0 && idx < k_scale) return n_chern + idx;
        }
    }
    for (std::size_t i = 0; i < aux.size(); ++i)
        if (aux[i] == name) return n_chern + k_scale + static_cast<int>(i);
    return -1;
}

GradedPolynomial GradedPolynomial::constant(const VariableSet& vs, const Rat& c) {
    GradedPolynomial p(vs);
    p.add_term(Monomial(static_cast<std::size_t>(vs.var_count()), 0), c);
    return p;
}

GradedPolynomial GradedPolynomial::variable(const VariableSet& vs, const std::string& name, int exponent) {
    int slot = vs.index_of(name);
    if (slot < 0) throw std::invalid_argument("unknown variable: " + name);
    GradedPolynomial p(vs);
    Monomial m(static_cast<std::size_t>(vs.var_count()), 0);
    m[static_cast<std::size_t>(slot)] = exponent;
    p.add_term(m, 1);
    return p;
}

int GradedPolynomial::weighted_degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * vs_.degree_of(static_cast<int>(i));
    return d;
}

int GradedPolynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, weighted_degree(m));
    return d;
}

bool GradedPolynomial::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int dm = weighted_degree(m);
        if (d == -1) d = dm;
        if (dm != d) return false;
    }
    return true;
}

bool GradedPolynomial::is_pure_c() const {
    for (const auto& [m, c] : terms_)
        for (std::size_t i = static_cast<std::size_t>(vs_.n_chern); i < m.size(); ++i)
            if (m[i] != 0) return false;
    return true;
}

void GradedPolynomial::add_term(const Monomial& m, const Rat& coeff) {
    if (m.size() != static_cast<std::size_t>(vs_.var_count()))
        throw std::invalid_argument("monomial length mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

Rat GradedPolynomial::coefficient_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

GradedPolynomial GradedPolynomial::operator-() const {
    GradedPolynomial out(vs_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

namespace {
void require_same_vars(const VariableSet& a, const VariableSet& b) {
    if (!(a == b)) throw std::invalid_argument("variable-set mismatch");
}
}  // namespace

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
    require_same_vars(vs_, o.vs_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
    require_same_vars(vs_, o.vs_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    require_same_vars(a.vs_, b.vs_);
    GradedPolynomial out(a.vs_);
    Monomial m(static_cast<std::size_t>(a.vs_.var_count()), 0);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

GradedPolynomial GradedPolynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    GradedPolynomial out = constant(vs_, 1);
    GradedPolynomial base = *this;
    while (e) {
        if (e & 1) out *= base;
        if (e >>= 1) base *= base;
    }
    return out;
}

bool GradedPolynomial::has_integer_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

std::vector<GradedPolynomial> series_quotient(const std::vector<GradedPolynomial>& numerator,
                                              const std::vector<GradedPolynomial>& denominator,
                                              int order) {
    if (denominator.empty()) throw std::invalid_argument("empty denominator series");
    const VariableSet& vs = denominator[0].vars();
    if (!(denominator[0] == GradedPolynomial::constant(vs, 1)))
        throw std::invalid_argument("denominator constant term must be 1");
    auto coeff_at = [&vs](const std::vector<GradedPolynomial>& s, int i) {
        return i < static_cast<int>(s.size()) ? s[static_cast<std::size_t>(i)] : GradedPolynomial::zero(vs);
    };
    std::vector<GradedPolynomial> q;
    q.reserve(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) {
        GradedPolynomial qm = coeff_at(numerator, m);
        for (int j = 1; j <= m; ++j) qm -= coeff_at(denominator, j) * q[static_cast<std::size_t>(m - j)];
        q.push_back(std::move(qm));
    }
    return q;
}

GradedPolynomial substitute(const GradedPolynomial& p,
                            const std::map<std::string, GradedPolynomial>& assignment) {
    if (assignment.empty()) throw std::invalid_argument("empty assignment");
    const VariableSet target = assignment.begin()->second.vars();
    for (const auto& [name, image] : assignment) require_same_vars(target, image.vars());

    const VariableSet& vs = p.vars();
    std::vector<const GradedPolynomial*> image_of(static_cast<std::size_t>(vs.var_count()), nullptr);
    for (int s = 0; s < vs.var_count(); ++s) {
        auto it = assignment.find(vs.name_of(s));
        if (it != assignment.end()) image_of[static_cast<std::size_t>(s)] = &it->second;
    }
    // Memoized powers of each image.
    std::vector<std::vector<GradedPolynomial>> powers(static_cast<std::size_t>(vs.var_count()));
    auto power = [&](int slot, int e) -> const GradedPolynomial& {
        auto& cache = powers[static_cast<std::size_t>(slot)];
        if (cache.empty()) cache.push_back(GradedPolynomial::constant(target, 1));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * (*image_of[static_cast<std::size_t>(slot)]));
        return cache[static_cast<std::size_t>(e)];
    };

    GradedPolynomial out = GradedPolynomial::zero(target);
    for (const auto& [m, c] : p.terms()) {
        GradedPolynomial term = GradedPolynomial::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!image_of[i])
                throw std::invalid_argument("unassigned variable: " + vs.name_of(static_cast<int>(i)));
            term *= power(static_cast<int>(i), m[i]);
        }
        out += term;
    }
    return out;
}

Rat substitute_numeric(const GradedPolynomial& p, const std::map<std::string, Rat>& assignment) {
    const VariableSet& vs = p.vars();
    Rat out = 0;
    for (const auto& [m, c] : p.terms()) {
        Rat term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = assignment.find(vs.name_of(static_cast<int>(i)));
            if (it == assignment.end())
                throw std::invalid_argument("unassigned variable: " + vs.name_of(static_cast<int>(i)));
            for (int e = 0; e < m[i]; ++e) term *= it->second;
        }
        out += term;
    }
    return out;
}

std::vector<std::pair<Monomial, Rat>> canonical_terms(const GradedPolynomial& p) {
    std::vector<std::pair<Monomial, Rat>> out(p.terms().begin(), p.terms().end());
    std::sort(out.begin(), out.end(), [&p](const auto& a, const auto& b) {
        int da = p.weighted_degree(a.first), db = p.weighted_degree(b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    return out;
}

std::string GradedPolynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : canonical_terms(*this)) {
        Rat a = c;
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (a < 0) a = -a;
        std::string vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += vs_.name_of(static_cast<int>(i));
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << vars;
        }
    }
    return os.str();
}

}  // namespace mmv
