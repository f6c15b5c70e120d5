#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "mmv/corpus.hpp"
#include "mmv/polyring.hpp"
#include "mmv/schubert.hpp"

namespace mmv::testing {

inline GradedPolynomial make_poly(const VariableSet& vs,
                                  const std::vector<std::pair<Rat, std::map<std::string, int>>>& terms) {
    GradedPolynomial p(vs);
    for (const auto& [coeff, vars] : terms) {
        Monomial m(static_cast<std::size_t>(vs.var_count()), 0);
        for (const auto& [name, e] : vars) {
            int slot = vs.index_of(name);
            if (slot < 0) throw std::invalid_argument("make_poly: unknown variable " + name);
            m[static_cast<std::size_t>(slot)] = e;
        }
        p.add_term(m, coeff);
    }
    return p;
}

inline std::string config_path(const std::string& name) {
    return corpus_path(MMV_CONFIG_DIR, name);
}

inline ConfigFile load_config(const std::string& name) { return load_and_validate(config_path(name)); }

// Π over the four Menelaus collinear triples minus the rank-2 determinantal
// class: the closed form of the Menelaus class.
inline GradedPolynomial menelaus_closed_form() {
    GradedPolynomial prod = collinearity_class(3, 6, {1, 2, 6});
    prod *= collinearity_class(3, 6, {1, 3, 5});
    prod *= collinearity_class(3, 6, {2, 3, 4});
    prod *= collinearity_class(3, 6, {4, 5, 6});
    return prod - determinantal_class(3, 6, 2);
}

inline GradedPolynomial random_poly(const VariableSet& vs, std::mt19937& rng, int max_terms = 5,
                                    int max_exp = 2) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<int> coeffd(-4, 4);
    GradedPolynomial p(vs);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m(static_cast<std::size_t>(vs.var_count()), 0);
        for (std::size_t s = 0; s < m.size(); ++s) m[s] = expd(rng);
        p.add_term(m, coeffd(rng));
    }
    return p;
}

}  // namespace mmv::testing
