// Wire formats: canonical polynomial JSON, partitions and Schur expansions,
// configurations with their bundled solve plans, and test configurations.
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmv/invariants.hpp"
#include "mmv/matroid.hpp"
#include "mmv/polyring.hpp"
#include "mmv/restriction.hpp"
#include "mmv/solver.hpp"
#include "mmv/symfunc.hpp"

namespace mmv {

using nlohmann::json;

// {"vars":{"n":3,"k":6},"terms":[{"c":[...],"d":[...],"coeff":"..."}...]}
// with terms in canonical monomial order.
json polynomial_to_json(const GradedPolynomial& p);
GradedPolynomial polynomial_from_json(const json& j);

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

// [{"lambda":[2,1,1],"coeff":"3"}...] sorted lexicographically by λ.
json schur_expansion_to_json(const SchurExpansion& e);

// {"assign":["A","B","0",...],"justification":"rank"} or
// {"assign":[...],"justification":"asserted","reason":"..."}
json test_configuration_to_json(const TestConfiguration& t);
TestConfiguration test_configuration_from_json(const json& j);

json known_count_to_json(const KnownCount& kc);
KnownCount known_count_from_json(const json& j);

// Configuration files carry the realization plus optional expected circuits
// and codimension (validated on load) and the bundled solve plan.
struct ConfigFile {
    Configuration config;
    std::vector<std::vector<int>> expected_circuits;  // 1-based triples etc.
    std::vector<TestConfiguration> tests;
    std::vector<KnownCount> known;
    std::optional<int> declared_codim;
    bool use_width = true;
    bool use_enumerative = true;
    bool auto_tests = false;
    bool symmetry = false;
};

ConfigFile config_from_json(const json& j);
ConfigFile load_config_file(const std::string& path);

// Tests files override a configuration's bundled solve plan.
struct TestsFile {
    std::vector<TestConfiguration> tests;
    std::vector<KnownCount> known;
    bool use_width = false;
    bool use_enumerative = false;
    bool auto_tests = false;
};

TestsFile load_tests_file(const std::string& path);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace mmv
