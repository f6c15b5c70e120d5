#include "mmv/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmv {

ConfigFile load_and_validate(const std::string& path) {
    ConfigFile file = load_config_file(path);
    const Configuration& c = file.config;

    if (!file.expected_circuits.empty()) {
        std::vector<Subset> expected;
        for (const auto& circ : file.expected_circuits) {
            Subset v = 0;
            for (int col : circ) {
                if (col < 1 || col > c.k()) throw std::runtime_error(path + ": circuit index out of range");
                v |= Subset(1) << (col - 1);
            }
            expected.push_back(v);
        }
        std::sort(expected.begin(), expected.end());
        std::vector<Subset> actual = c.circuits(std::min(c.n() + 1, c.k()));
        // Only compare circuits of the declared sizes; larger generic circuits
        // (every spanning set plus one point) are not listed in the files.
        std::size_t max_declared = 0;
        for (const auto& circ : file.expected_circuits) max_declared = std::max(max_declared, circ.size());
        std::erase_if(actual, [&](Subset v) {
            return static_cast<std::size_t>(std::popcount(v)) > max_declared;
        });
        std::sort(actual.begin(), actual.end());
        if (actual != expected)
            throw std::runtime_error(path + ": realization circuits do not match the declared incidence");
    }

    if (file.declared_codim) {
        // Recompute without the override to confirm the declared value.
        Configuration twin(c.n(), c.k(), c.columns(), c.name());
        if (twin.codimension() != *file.declared_codim)
            throw std::runtime_error(path + ": declared codimension " +
                                     std::to_string(*file.declared_codim) + " but Jacobian rank gives " +
                                     std::to_string(twin.codimension()));
    }

    for (const auto& t : file.tests) {
        if (t.justification == TestConfiguration::Justification::RankExcluded &&
            !is_rank_excluded(t, c))
            throw std::runtime_error(path + ": bundled test " + t.display() + " is not rank-excluded");
    }
    return file;
}

std::string corpus_path(const std::string& dir, const std::string& name) {
    return dir + "/" + name + ".json";
}

}  // namespace mmv
