#include "mmv/restriction.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mmv {

int TestConfiguration::axis_count() const {
    int m = 0;
    for (int a : assignment) {
        if (a < 0) throw std::invalid_argument("negative axis label");
        m = std::max(m, a);
    }
    std::vector<bool> seen(static_cast<std::size_t>(m + 1), false);
    for (int a : assignment) seen[static_cast<std::size_t>(a)] = true;
    for (int a = 1; a <= m; ++a)
        if (!seen[static_cast<std::size_t>(a)])
            throw std::invalid_argument("axis labels must be exactly 1..m");
    return m;
}

std::string TestConfiguration::display() const {
    std::string out;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (i) out += "|";
        out += assignment[i] == 0 ? std::string("0")
                                  : std::string(1, static_cast<char>('A' + assignment[i] - 1));
    }
    return out;
}

bool is_rank_excluded(const TestConfiguration& d, const Configuration& c) {
    if (static_cast<int>(d.assignment.size()) != c.k())
        throw std::invalid_argument("test configuration length mismatch");
    const std::vector<int>& ranks = c.rank_table();
    Subset full = c.full_set();
    for (Subset v = 1; v <= full && v != 0; ++v) {
        unsigned axes = 0;
        for (int i : subset_members(v)) {
            int a = d.assignment[static_cast<std::size_t>(i)];
            if (a > 0) axes |= 1u << (a - 1);
        }
        if (std::popcount(axes) > ranks[v]) return true;
    }
    return false;
}

RestrictionMap restriction_map(const TestConfiguration& d, int n, int k) {
    if (static_cast<int>(d.assignment.size()) != k)
        throw std::invalid_argument("test configuration length mismatch");
    int m = d.axis_count();
    if (m > n) throw std::invalid_argument("more axes than ambient dimensions");

    std::vector<std::string> aux;
    for (int i = 1; i <= n; ++i) aux.push_back("t" + std::to_string(i));
    for (int j = 0; j < k; ++j)
        if (d.assignment[static_cast<std::size_t>(j)] == 0) aux.push_back("z" + std::to_string(j + 1));
    VariableSet target(0, 0, aux);

    RestrictionMap map;
    map.n = n;
    map.k = k;
    map.axis = d.assignment;
    map.target = target;

    // e_i(t_1..t_n) built incrementally.
    std::vector<GradedPolynomial> e{GradedPolynomial::constant(target, 1)};
    for (int i = 1; i <= n; ++i) {
        GradedPolynomial ti = GradedPolynomial::variable(target, "t" + std::to_string(i));
        e.push_back(GradedPolynomial::zero(target));
        for (std::size_t s = e.size() - 1; s >= 1; --s) e[s] += e[s - 1] * ti;
    }
    for (int i = 1; i <= n; ++i) map.images["c" + std::to_string(i)] = e[static_cast<std::size_t>(i)];
    for (int j = 1; j <= k; ++j) {
        int a = d.assignment[static_cast<std::size_t>(j - 1)];
        map.images["d" + std::to_string(j)] =
            a == 0 ? GradedPolynomial::variable(target, "z" + std::to_string(j))
                   : GradedPolynomial::variable(target, "t" + std::to_string(a));
    }
    return map;
}

GradedPolynomial apply(const RestrictionMap& map, const GradedPolynomial& p) {
    if (!(p.vars() == VariableSet(map.n, map.k)))
        throw std::invalid_argument("apply: polynomial not over the map's source ring");
    if (p.is_zero()) return GradedPolynomial::zero(map.target);
    return substitute(p, map.images);
}

}  // namespace mmv
