#include "mmv/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace mmv {

json polynomial_to_json(const GradedPolynomial& p) {
    const VariableSet& vs = p.vars();
    if (!vs.aux.empty())
        throw std::invalid_argument("polynomial JSON covers c/d rings only");
    json j;
    j["vars"] = {{"n", vs.n_chern}, {"k", vs.k_scale}};
    json terms = json::array();
    for (const auto& [m, c] : canonical_terms(p)) {
        json t;
        t["c"] = std::vector<int>(m.begin(), m.begin() + vs.n_chern);
        t["d"] = std::vector<int>(m.begin() + vs.n_chern, m.end());
        t["coeff"] = rat_to_string(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

GradedPolynomial polynomial_from_json(const json& j) {
    int n = j.at("vars").at("n").get<int>();
    int k = j.at("vars").at("k").get<int>();
    VariableSet vs(n, k);
    GradedPolynomial p(vs);
    for (const auto& t : j.at("terms")) {
        std::vector<int> ce = t.at("c").get<std::vector<int>>();
        std::vector<int> de = t.at("d").get<std::vector<int>>();
        if (static_cast<int>(ce.size()) != n || static_cast<int>(de.size()) != k)
            throw std::invalid_argument("polynomial term has wrong exponent lengths");
        Monomial m;
        m.insert(m.end(), ce.begin(), ce.end());
        m.insert(m.end(), de.begin(), de.end());
        p.add_term(m, rat_from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

json partition_to_json(const Partition& p) { return json(p.parts); }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

json schur_expansion_to_json(const SchurExpansion& e) {
    json out = json::array();
    for (const auto& [lambda, c] : e.coeffs) {
        json t;
        t["lambda"] = partition_to_json(lambda);
        t["coeff"] = rat_to_string(c);
        out.push_back(std::move(t));
    }
    return out;
}

json test_configuration_to_json(const TestConfiguration& t) {
    json j;
    json assign = json::array();
    for (int a : t.assignment)
        assign.push_back(a == 0 ? std::string("0") : std::string(1, static_cast<char>('A' + a - 1)));
    j["assign"] = std::move(assign);
    j["justification"] =
        t.justification == TestConfiguration::Justification::RankExcluded ? "rank" : "asserted";
    if (!t.reason.empty()) j["reason"] = t.reason;
    return j;
}

TestConfiguration test_configuration_from_json(const json& j) {
    TestConfiguration t;
    for (const auto& a : j.at("assign")) {
        std::string s = a.get<std::string>();
        if (s == "0")
            t.assignment.push_back(0);
        else if (s.size() == 1 && s[0] >= 'A' && s[0] <= 'Z')
            t.assignment.push_back(s[0] - 'A' + 1);
        else
            throw std::invalid_argument("bad axis label: " + s);
    }
    std::string just = j.value("justification", "rank");
    if (just == "rank") {
        t.justification = TestConfiguration::Justification::RankExcluded;
    } else if (just == "asserted") {
        t.justification = TestConfiguration::Justification::Asserted;
        t.reason = j.value("reason", "");
        if (t.reason.empty())
            throw std::invalid_argument("asserted test configuration needs a reason");
    } else {
        throw std::invalid_argument("bad justification: " + just);
    }
    t.axis_count();  // validates label contiguity
    return t;
}

json known_count_to_json(const KnownCount& kc) {
    json j;
    j["q"] = kc.q;
    j["count"] = kc.count.get_str();
    if (!kc.reason.empty()) j["reason"] = kc.reason;
    return j;
}

KnownCount known_count_from_json(const json& j) {
    KnownCount kc;
    kc.q = j.at("q").get<std::vector<int>>();
    const auto& cnt = j.at("count");
    kc.count = cnt.is_string() ? Int(cnt.get<std::string>()) : Int(cnt.get<long>());
    kc.reason = j.value("reason", "");
    return kc;
}

ConfigFile config_from_json(const json& j) {
    int n = j.at("n").get<int>();
    int k = j.at("k").get<int>();
    std::vector<std::vector<Rat>> cols;
    for (const auto& col : j.at("columns")) {
        std::vector<Rat> v;
        for (const auto& entry : col) v.push_back(rat_from_string(entry.get<std::string>()));
        cols.push_back(std::move(v));
    }
    std::optional<int> codim;
    if (j.contains("codim")) codim = j.at("codim").get<int>();
    ConfigFile out{Configuration(n, k, std::move(cols), j.value("name", ""), codim), {}, {}, {}, codim};
    if (j.contains("circuits"))
        out.expected_circuits = j.at("circuits").get<std::vector<std::vector<int>>>();
    if (j.contains("tests"))
        for (const auto& t : j.at("tests")) out.tests.push_back(test_configuration_from_json(t));
    if (j.contains("known"))
        for (const auto& kc : j.at("known")) out.known.push_back(known_count_from_json(kc));
    if (j.contains("options")) {
        const auto& o = j.at("options");
        out.use_width = o.value("use_width", true);
        out.use_enumerative = o.value("use_enumerative", true);
        out.auto_tests = o.value("auto_tests", false);
        out.symmetry = o.value("symmetry", false);
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(1) << "\n";
}

ConfigFile load_config_file(const std::string& path) { return config_from_json(load_json_file(path)); }

TestsFile load_tests_file(const std::string& path) {
    json j = load_json_file(path);
    TestsFile out;
    if (j.contains("tests"))
        for (const auto& t : j.at("tests")) out.tests.push_back(test_configuration_from_json(t));
    if (j.contains("known"))
        for (const auto& kc : j.at("known")) out.known.push_back(known_count_from_json(kc));
    out.use_width = j.value("use_width", false);
    out.use_enumerative = j.value("use_enumerative", false);
    out.auto_tests = j.value("auto_tests", false);
    return out;
}

}  // namespace mmv
