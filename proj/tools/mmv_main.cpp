// Command-line front end: class computation, verification, enumerative
// queries, degrees, Schur/Schubert closed forms and stabilization.
//
// Exit codes: 0 success; 2 solution dimension > 1; 3 inconsistent
// constraints; 4 audit failure; 5 I/O or format error.
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mmv/corpus.hpp"
#include "mmv/invariants.hpp"
#include "mmv/json_io.hpp"
#include "mmv/schubert.hpp"
#include "mmv/solver.hpp"
#include "mmv/stabilize.hpp"
#include "mmv/symfunc.hpp"

namespace {

using namespace mmv;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::string expected_class_path(const std::string& config_path) {
    std::filesystem::path p(config_path);
    return (p.parent_path() / "expected" / (p.stem().string() + ".class.json")).string();
}

json result_report(const ConfigFile& file, const SolveResult& r, const AuditReport* audits) {
    const Configuration& c = file.config;
    json j;
    j["config"] = c.name();
    j["n"] = c.n();
    j["k"] = c.k();
    j["codim"] = c.codimension();
    j["dimension"] = r.dimension;
    j["symmetry_reduced"] = r.symmetry_reduced;
    j["rows_by_provenance"] = {{"kernel", r.rows.kernel},
                               {"zero", r.rows.zero},
                               {"width", r.rows.width},
                               {"known", r.rows.known}};
    json tests = json::array();
    for (const auto& t : r.tests_used) tests.push_back(test_configuration_to_json(t));
    j["tests_used"] = std::move(tests);
    if (r.inconsistent) j["inconsistent"] = r.diagnosis;
    if (r.normalized_class) {
        j["class"] = polynomial_to_json(*r.normalized_class);
        j["term_count"] = r.normalized_class->term_count();
    }
    if (!r.residual_basis.empty()) {
        json basis = json::array();
        for (const auto& b : r.residual_basis) basis.push_back(polynomial_to_json(b));
        j["residual_basis"] = std::move(basis);
    }
    if (!r.undetermined_pure_d.empty()) j["undetermined_pure_d"] = r.undetermined_pure_d;
    if (audits) {
        json ja = json::array();
        for (const auto& e : audits->entries)
            ja.push_back({{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
        j["audits"] = std::move(ja);
        if (!audits->unexplained_zeros.empty()) j["unexplained_zeros"] = audits->unexplained_zeros;
    }
    return j;
}

// Class for query commands: explicit file, bundled expected class, or a
// fresh solve with the bundled plan.
GradedPolynomial obtain_class(const ConfigFile& file, const std::string& config_path,
                              const std::string& class_path, int threads) {
    if (!class_path.empty()) return polynomial_from_json(load_json_file(class_path));
    std::string expected = expected_class_path(config_path);
    if (std::filesystem::exists(expected)) return polynomial_from_json(load_json_file(expected));
    SolveOptions opts;
    opts.use_width = file.use_width;
    opts.use_enumerative = file.use_enumerative;
    opts.auto_tests = file.auto_tests;
    opts.symmetry = file.symmetry;
    opts.threads = threads;
    SolveResult r = solve_class(file.config, file.tests, file.known, opts);
    if (!r.normalized_class)
        throw std::runtime_error("no unique class for " + file.config.name() +
                                 " (dimension " + std::to_string(r.dimension) + ")");
    return *r.normalized_class;
}

void print_poly(const GradedPolynomial& p, const std::string& format) {
    if (format == "text")
        std::cout << p.to_text() << "\n";
    else
        std::cout << polynomial_to_json(p).dump(1) << "\n";
}

int run_class(const std::string& config_path, const std::string& tests_path,
              const std::string& report_path, const std::string& checkpoint, int halt_after,
              int threads, bool auto_tests_flag, bool symmetry_flag, const std::string& format) {
    ConfigFile file = load_and_validate(config_path);
    std::vector<TestConfiguration> tests = file.tests;
    std::vector<KnownCount> known = file.known;
    SolveOptions opts;
    opts.use_width = file.use_width;
    opts.use_enumerative = file.use_enumerative;
    opts.auto_tests = file.auto_tests || auto_tests_flag;
    opts.symmetry = file.symmetry || symmetry_flag;
    opts.threads = threads;
    opts.checkpoint_path = checkpoint;
    opts.halt_after_sources = halt_after;
    if (!tests_path.empty()) {
        TestsFile tf = load_tests_file(tests_path);
        tests = tf.tests;
        known = tf.known;
        opts.use_width = tf.use_width;
        opts.use_enumerative = tf.use_enumerative;
        opts.auto_tests = tf.auto_tests;
    }

    SolveResult r = solve_class(file.config, tests, known, opts);
    if (r.halted_at_checkpoint) {
        std::cerr << "halted at checkpoint after processing the requested number of sources\n";
        return 0;
    }

    AuditReport audits;
    bool have_audits = false;
    if (r.normalized_class) {
        audits = verify_class(file.config, *r.normalized_class, r.tests_used, known);
        have_audits = true;
    }
    json report = result_report(file, r, have_audits ? &audits : nullptr);
    if (!report_path.empty()) write_json_file(report_path, report);

    if (r.inconsistent) {
        std::cerr << "inconsistent: " << r.diagnosis << "\n";
        return 3;
    }
    if (r.dimension != 1 || !r.normalized_class) {
        std::cerr << "solution space dimension " << r.dimension << " (need 1)\n";
        if (!r.undetermined_pure_d.empty()) {
            std::cerr << "undetermined pure-d coefficient slots:\n";
            for (const auto& q : r.undetermined_pure_d) {
                std::cerr << "  q=";
                for (std::size_t i = 0; i < q.size(); ++i) std::cerr << (i ? "," : "") << q[i];
                std::cerr << "\n";
            }
        }
        return 2;
    }
    if (!audits.all_pass) {
        std::cerr << "audit failure\n";
        for (const auto& e : audits.entries)
            if (!e.pass) std::cerr << "  " << e.name << ": " << e.detail << "\n";
        return 4;
    }
    if (report_path.empty()) print_poly(*r.normalized_class, format);
    std::cerr << "dimension 1, " << r.normalized_class->term_count() << " terms, audits pass\n";
    return 0;
}

int run_verify(const std::string& config_path, const std::string& class_path) {
    ConfigFile file = load_and_validate(config_path);
    GradedPolynomial cls = polynomial_from_json(load_json_file(class_path));
    AuditReport audits = verify_class(file.config, cls, file.tests, file.known);
    for (const auto& e : audits.entries)
        std::cout << (e.pass ? "[PASS] " : "[FAIL] ") << e.name
                  << (e.detail.empty() ? "" : "  (" + e.detail + ")") << "\n";
    if (!audits.unexplained_zeros.empty())
        std::cout << "[INFO] " << audits.unexplained_zeros.size()
                  << " zero pure-d coefficients not explained by rank arguments\n";
    return audits.all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant classes of matrix matroid varieties"};
    app.require_subcommand(1);

    std::string config_path, tests_path, report_path, class_path, checkpoint, format = "json";
    std::string lambda_str, ell_str, q_str;
    int n = 0, k = 0, to_n = 0, threads = 0, halt_after = -1;
    bool auto_tests = false, symmetry = false;

    auto* cmd_class = app.add_subcommand("class", "solve for the class of a configuration");
    cmd_class->add_option("config", config_path)->required();
    cmd_class->add_option("--tests", tests_path, "tests file overriding the bundled plan");
    cmd_class->add_option("--report", report_path, "write the solve report JSON here");
    cmd_class->add_option("--checkpoint", checkpoint, "checkpoint file for long solves");
    cmd_class->add_option("--halt-after", halt_after, "stop after this many constraint sources");
    cmd_class->add_option("--threads", threads);
    cmd_class->add_flag("--auto", auto_tests, "auto-generate rank-excluded tests");
    cmd_class->add_flag("--symmetry", symmetry, "solve on the automorphism-invariant subspace");
    cmd_class->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* cmd_verify = app.add_subcommand("verify", "verify a class file against a configuration");
    cmd_verify->add_option("config", config_path)->required();
    cmd_verify->add_option("class", class_path)->required();

    auto* cmd_gw = app.add_subcommand("gw", "enumerative count from a class coefficient");
    cmd_gw->add_option("--config", config_path)->required();
    cmd_gw->add_option("--q", q_str)->required();
    cmd_gw->add_option("--class", class_path);
    cmd_gw->add_option("--threads", threads);

    auto* cmd_degree = app.add_subcommand("degree", "projective degree of the variety");
    cmd_degree->add_option("--config", config_path)->required();
    cmd_degree->add_option("--class", class_path);
    cmd_degree->add_option("--threads", threads);

    auto* cmd_schur = app.add_subcommand("schur", "Schur polynomial in the Chern classes");
    cmd_schur->add_option("--lambda", lambda_str)->required();
    cmd_schur->add_option("--n", n)->required();
    cmd_schur->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* cmd_schubert = app.add_subcommand("schubert", "matrix Schubert variety class");
    cmd_schubert->add_option("--ell", ell_str)->required();
    cmd_schubert->add_option("--n", n)->required();
    cmd_schubert->add_option("--k", k)->required();
    cmd_schubert->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* cmd_stab = app.add_subcommand("stabilize", "lift a class to a larger ambient dimension");
    cmd_stab->add_option("--config", config_path)->required();
    cmd_stab->add_option("--to-n", to_n)->required();
    cmd_stab->add_option("--class", class_path);
    cmd_stab->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    cmd_stab->add_option("--threads", threads);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_class->parsed())
            return run_class(config_path, tests_path, report_path, checkpoint, halt_after, threads,
                             auto_tests, symmetry, format);
        if (cmd_verify->parsed()) return run_verify(config_path, class_path);
        if (cmd_gw->parsed()) {
            ConfigFile file = load_and_validate(config_path);
            GradedPolynomial cls = obtain_class(file, config_path, class_path, threads);
            std::cout << gw(cls, parse_int_list(q_str), file.config.codimension()).get_str() << "\n";
            return 0;
        }
        if (cmd_degree->parsed()) {
            ConfigFile file = load_and_validate(config_path);
            GradedPolynomial cls = obtain_class(file, config_path, class_path, threads);
            std::cout << degree_projective(cls, file.config.n(), file.config.k()).get_str() << "\n";
            return 0;
        }
        if (cmd_schur->parsed()) {
            print_poly(schur(Partition(parse_int_list(lambda_str)), n), format);
            return 0;
        }
        if (cmd_schubert->parsed()) {
            std::vector<int> ints = parse_int_list(ell_str);
            FlagSpec ell{std::vector<long>(ints.begin(), ints.end())};
            print_poly(schubert_class(ell, n, k), format);
            return 0;
        }
        if (cmd_stab->parsed()) {
            ConfigFile file = load_and_validate(config_path);
            GradedPolynomial cls = obtain_class(file, config_path, class_path, threads);
            int s = file.config.n();
            print_poly(localize_up(cls, s, to_n, file.config.k()), format);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
    return 5;
}
