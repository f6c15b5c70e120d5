// Geometric content extracted from a computed class: enumerative counts,
// projective degree by both torus specializations, the pure-c part, the
// Schur-times-(-d)-monomial expansion with its nonnegativity audit, and the
// sound direction of the hierarchy criterion.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "mmv/matroid.hpp"
#include "mmv/polyring.hpp"
#include "mmv/restriction.hpp"
#include "mmv/solver.hpp"
#include "mmv/symfunc.hpp"

namespace mmv {

// (-1)^codim times the coefficient of Π d_i^{q_i}; must come out a
// nonnegative integer, anything else signals a wrong class upstream.
Int gw(const GradedPolynomial& cls, const std::vector<int>& q, int codim);

// Both substitutions c_i = C(n,i), d_i = 0 and c_i = 0, d_i = -1; they must
// agree and the common value is returned.
Int degree_projective(const GradedPolynomial& cls, int n, int k);

// d_i = 0 specialization, returned over the pure-c ring.
GradedPolynomial pure_c(const GradedPolynomial& cls);

struct SchurDTerm {
    Partition mu;
    std::vector<int> w;  // d-exponents
    Rat coeff;           // coefficient of Δ_mu(c) Π(-d_i)^{w_i}
};

std::vector<SchurDTerm> schur_d_expand(const GradedPolynomial& cls, int n, int k);

enum class HierarchyVerdict { CertifiedContained, Inconclusive };

// Nonzero restriction image certifies containment of the test variety; a
// zero image decides nothing.
HierarchyVerdict hierarchy_probe(const Configuration& c, const GradedPolynomial& cls,
                                 const TestConfiguration& d);

struct AuditEntry {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    bool all_pass = true;
    std::vector<std::vector<int>> unexplained_zeros;  // informational only

    void add(const std::string& name, bool pass, const std::string& detail = "");
};

// Full verification battery for a class against its configuration:
// homogeneity/degree, integrality, degree-substitution agreement, Schur-d
// nonnegativity, width bound, forced-zero consistency, count sign/negativity,
// kernel vanishing for the given tests, and known-count rows.
AuditReport verify_class(const Configuration& c, const GradedPolynomial& cls,
                         const std::vector<TestConfiguration>& tests,
                         const std::vector<KnownCount>& known);

}  // namespace mmv
