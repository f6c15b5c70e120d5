// Test configurations (block assignments of columns to independent axis
// directions or zero) and the substitution homomorphisms induced by their
// stabilizer tori. A nonzero class must vanish under the map of any test
// configuration lying outside the variety.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "mmv/matroid.hpp"
#include "mmv/polyring.hpp"

namespace mmv {

struct TestConfiguration {
    // Per column: 0 for the zero vector, 1..m for one of m independent axes.
    std::vector<int> assignment;
    enum class Justification { RankExcluded, Asserted };
    Justification justification = Justification::RankExcluded;
    std::string reason;  // human-readable grounds for an asserted exclusion

    int axis_count() const;  // m; validates that axes used are exactly 1..m
    std::string display() const;
};

// True iff some subset V has more distinct axes among the nonzero columns of
// D than r_C(V); certifies that D lies outside the variety of C.
bool is_rank_excluded(const TestConfiguration& d, const Configuration& c);

struct RestrictionMap {
    int n = 0, k = 0;
    std::vector<int> axis;  // the defining assignment
    VariableSet target;     // t_1..t_n plus a fresh z_j per zero column
    std::map<std::string, GradedPolynomial> images;
};

// c_i -> e_i(t_1..t_n); d_j -> t_{axis(j)} for axis columns, z_j for zero
// columns. Requires axis_count() <= n.
RestrictionMap restriction_map(const TestConfiguration& d, int n, int k);

// Exact image of a polynomial over the (n, k) ring.
GradedPolynomial apply(const RestrictionMap& map, const GradedPolynomial& p);

}  // namespace mmv
