// critgraph: generate the graph families, run the exact coloring and
// criticality checkers, build the Deng program, and search for negative
// rays -- every verdict backed by a certificate that is reloaded from
// disk and revalidated before the exit code is decided.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "critgraph/certificates.hpp"
#include "critgraph/cone_solver.hpp"
#include "critgraph/criticality.hpp"
#include "critgraph/deng_program.hpp"
#include "critgraph/families.hpp"
#include "critgraph/graph_io.hpp"
#include "json.hpp"

namespace cg = critgraph;
namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "critgraph 0.1.0";

struct RunRecorder {
    std::string manifest_path;
    std::string command_line;
    std::map<std::string, std::string> inputs;
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    static std::string fnv1a_hex(const std::string& bytes) {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 1099511628211ull;
        }
        char buf[32];
        std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

    void record_input(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) return;
        std::ostringstream ss;
        ss << in.rdbuf();
        inputs[path] = fnv1a_hex(ss.str());
    }

    void record_output(const std::string& path) { outputs.push_back(path); }

    void write() const {
        if (manifest_path.empty()) return;
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        nlohmann::json j{{"command_line", command_line},
                         {"tool_version", kVersion},
                         {"inputs", inputs},
                         {"outputs", outputs},
                         {"wall_clock_ms", elapsed}};
        std::ofstream out(manifest_path);
        out << j.dump(2) << "\n";
    }
};

RunRecorder g_recorder;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CRITGRAPH_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    g_recorder.record_output(path);
}

// Emit a certificate, reload it from disk, and revalidate; the exit code
// comes from the reloaded copy, never the in-memory object.
struct CertOutcome {
    cg::certs::Validation validation;
    nlohmann::json reloaded;
};

CertOutcome emit_and_revalidate(const nlohmann::json& cert, const std::string& out_path) {
    std::string path = out_path;
    bool temporary = path.empty();
    if (temporary) {
        path = (fs::temp_directory_path() /
                ("critgraph-cert-" + std::to_string(::getpid()) + ".json"))
                   .string();
    }
    write_text_file(path, cert.dump(2) + "\n");
    std::ifstream in(path);
    nlohmann::json reloaded;
    in >> reloaded;
    std::string base_dir = fs::path(path).has_parent_path()
                               ? fs::path(path).parent_path().string()
                               : std::string(".");
    auto validation = cg::certs::revalidate(reloaded, base_dir);
    if (temporary) fs::remove(path);
    return CertOutcome{validation, reloaded};
}

int finish_certificate(const nlohmann::json& cert, const std::string& out_path, bool human) {
    CertOutcome outcome = emit_and_revalidate(cert, out_path);
    if (!outcome.validation.valid) {
        std::cerr << "error: certificate failed revalidation: " << outcome.validation.message
                  << "\n";
        return 2;
    }
    if (human) {
        std::cout << outcome.validation.message << "\n";
    } else if (out_path.empty()) {
        std::cout << outcome.reloaded.dump(2) << "\n";
    }
    return outcome.validation.verdict ? 0 : 1;
}

cg::Graph load_graph_checked(const std::string& path, int max_n) {
    g_recorder.record_input(path);
    cg::Graph g = cg::load_graph_file(path);
    if (g.n() > max_n) {
        throw std::invalid_argument("graph has " + std::to_string(g.n()) +
                                    " vertices; --max-n is " + std::to_string(max_n));
    }
    return g;
}

// ---- gen ----

int cmd_gen(const std::string& family, std::optional<int> n, const std::string& out) {
    cg::Graph g;
    if (family == "k4") {
        g = cg::families::k4();
    } else if (family == "kite") {
        g = cg::families::kite();
    } else if (family == "moser") {
        g = cg::families::moser_spindle();
    } else if (family == "fn") {
        if (!n) throw CLI::ValidationError("gen fn requires <n>");
        g = cg::families::thomas_walls(*n);
    } else if (family == "counterexample") {
        if (!n) throw CLI::ValidationError("gen counterexample requires <n>");
        g = cg::families::counterexample(*n);
    } else {
        throw CLI::ValidationError("unknown family: " + family +
                                   " (expected k4|kite|moser|fn|counterexample)");
    }
    std::string text = cg::graph_to_json(g).dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else if (out.size() > 4 && (out.ends_with(".col") || out.ends_with(".dimacs"))) {
        cg::save_graph_file(out, g);
        g_recorder.record_output(out);
    } else {
        write_text_file(out, text);
    }
    return 0;
}

// ---- check ----

int cmd_check(const std::string& kind, const std::string& graph_path, std::optional<int> k,
              int jobs, int max_n, const std::string& out, bool human) {
    cg::Graph g = load_graph_checked(graph_path, max_n);
    nlohmann::json cert;
    if (kind == "chi") {
        int chi = cg::chromatic_number(g);
        cert = cg::certs::chromatic_number_certificate(g, chi, cg::find_coloring(g, chi));
        if (human) std::cout << "chi = " << chi << "\n";
    } else if (kind == "k-colorable") {
        if (!k) throw CLI::ValidationError("check k-colorable requires --k");
        cert = cg::certs::k_colorable_certificate(g, *k, cg::find_coloring(g, *k));
    } else if (kind == "d-graph") {
        cert = cg::certs::criticality_certificate(g, cg::is_d_graph(g));
    } else if (kind == "vertex-critical") {
        cert = cg::certs::criticality_certificate(g, cg::is_vertex_critical_4(g));
    } else if (kind == "induced-d-scan") {
        cert = cg::certs::induced_d_scan_certificate(g, cg::find_induced_d_subgraph(g, jobs));
    } else if (kind == "edge-subgraph-d") {
        cert = cg::certs::edge_subgraph_d_certificate(g, cg::find_edge_subgraph_d_graph(g));
    } else {
        throw CLI::ValidationError(
            "unknown check kind: " + kind +
            " (expected chi|k-colorable|d-graph|vertex-critical|induced-d-scan|edge-subgraph-d)");
    }
    return finish_certificate(cert, out, human);
}

// ---- refute-lemma3 ----

struct RefutationRow {
    std::string name;
    cg::Graph g;
    int chi = 0;
    int max_deg = 0;
    bool vertex_critical = false;
    bool d_graph = false;
    bool induced_d_absent = false;

    bool pass() const {
        return chi == 4 && max_deg <= 4 && vertex_critical && !d_graph && induced_d_absent;
    }
};

RefutationRow evaluate_row(std::string name, cg::Graph g, int jobs) {
    RefutationRow row{std::move(name), std::move(g)};
    row.chi = cg::chromatic_number(row.g);
    row.max_deg = cg::max_degree(row.g);
    row.vertex_critical = cg::is_vertex_critical_4(row.g).verdict;
    row.d_graph = cg::is_d_graph(row.g).verdict;
    row.induced_d_absent = !cg::find_induced_d_subgraph(row.g, jobs).has_value();
    return row;
}

int cmd_refute_lemma3(int from, int to, int jobs, int max_n, bool human,
                      const std::string& out) {
    std::vector<RefutationRow> rows;
    rows.push_back(
        evaluate_row("moser+edge",
                     cg::families::add_degree3_edge(cg::families::moser_spindle()).first, jobs));
    for (int n = from; n <= to; ++n) {
        if (4 + 3 * n > max_n) {
            std::cerr << "warning: truncating at n=" << n << " (F_" << n << " exceeds --max-n "
                      << max_n << ")\n";
            break;
        }
        rows.push_back(evaluate_row("counterexample(" + std::to_string(n) + ")",
                                    cg::families::counterexample(n), jobs));
    }

    bool all_pass = true;
    nlohmann::json table = nlohmann::json::array();
    for (const RefutationRow& row : rows) {
        all_pass = all_pass && row.pass();
        table.push_back(nlohmann::json{{"name", row.name},
                                       {"n_vertices", row.g.n()},
                                       {"chi", row.chi},
                                       {"max_degree", row.max_deg},
                                       {"vertex_critical", row.vertex_critical},
                                       {"d_graph", row.d_graph},
                                       {"induced_d_absent", row.induced_d_absent},
                                       {"pass", row.pass()}});
    }
    nlohmann::json result{{"rows", table}, {"all_pass", all_pass}};
    if (human) {
        std::printf("%-22s %4s %4s %8s %8s %8s %8s  %s\n", "graph", "n", "chi", "maxdeg",
                    "v-crit", "d-graph", "no-ind-D", "status");
        for (const RefutationRow& row : rows) {
            std::printf("%-22s %4d %4d %8d %8s %8s %8s  %s\n", row.name.c_str(), row.g.n(),
                        row.chi, row.max_deg, row.vertex_critical ? "yes" : "no",
                        row.d_graph ? "yes" : "no", row.induced_d_absent ? "yes" : "no",
                        row.pass() ? "PASS" : "FAIL");
        }
        std::printf("%s\n", all_pass ? "all rows PASS" : "some rows FAIL");
    } else if (out.empty()) {
        std::cout << result.dump(2) << "\n";
    }
    if (!out.empty()) write_text_file(out, result.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

// ---- deng ----

int cmd_deng_build(const std::string& graph_path, int max_n, const std::string& out,
                   const std::string& csv_dir) {
    cg::Graph g = load_graph_checked(graph_path, max_n);
    cg::deng::Instance inst = cg::deng::make_instance(g);
    nlohmann::json bundle = cg::deng::instance_to_json(inst);
    if (!csv_dir.empty()) {
        fs::create_directories(csv_dir);
        for (auto [name, m] : {std::pair<const char*, const cg::SymMatrix*>{"C", &inst.C},
                               {"D", &inst.D},
                               {"P", &inst.P}}) {
            std::string path = (fs::path(csv_dir) / (std::string(name) + ".csv")).string();
            cg::save_matrix_csv(path, m->dense());
            g_recorder.record_output(path);
        }
    }
    if (out.empty()) {
        std::cout << bundle.dump(2) << "\n";
    } else {
        write_text_file(out, bundle.dump(2) + "\n");
    }
    return 0;
}

int cmd_deng_solve(const std::string& graph_path, const cg::solver::SolveConfig& cfg, int max_n,
                   const std::string& out_dir, const std::string& name, bool human) {
    cg::Graph g = load_graph_checked(graph_path, max_n);
    cg::solver::RayCertificate ray = cg::solver::find_negative_ray(g, cfg);

    fs::create_directories(out_dir);
    std::string d_csv = name + "_D.csv";
    std::string p_csv = name + "_P.csv";
    cg::save_matrix_csv((fs::path(out_dir) / d_csv).string(), ray.D.dense());
    cg::save_matrix_csv((fs::path(out_dir) / p_csv).string(), ray.P.dense());
    g_recorder.record_output((fs::path(out_dir) / d_csv).string());
    g_recorder.record_output((fs::path(out_dir) / p_csv).string());

    nlohmann::json cert = cg::certs::ray_certificate(g, ray, d_csv, p_csv);
    std::string cert_path = (fs::path(out_dir) / (name + ".json")).string();
    int code = finish_certificate(cert, cert_path, human);
    if (human) {
        std::cout << to_string(ray.verdict) << ", objective " << ray.objective << "\n";
    } else {
        std::cout << cert.dump(2) << "\n";
    }
    return code;
}

int cmd_deng_verify(const std::string& cert_path) {
    g_recorder.record_input(cert_path);
    std::ifstream in(cert_path);
    if (!in) throw std::runtime_error("cannot open " + cert_path);
    nlohmann::json cert;
    in >> cert;
    std::string base_dir = fs::path(cert_path).has_parent_path()
                               ? fs::path(cert_path).parent_path().string()
                               : std::string(".");
    auto validation = cg::certs::revalidate(cert, base_dir);
    std::cout << (validation.valid ? "valid" : "invalid") << ": " << validation.message << "\n";
    return validation.valid ? 0 : 1;
}

// ---- dcolor-matrix ----

int cmd_dcolor_matrix(const std::string& graph_path, std::vector<int> edge_spec, bool all_edges,
                      int max_n, const std::string& csv_dir, const std::string& out) {
    cg::Graph g = load_graph_checked(graph_path, max_n);
    std::vector<cg::Edge> edges;
    if (all_edges) {
        edges = g.edges();
    } else {
        if (edge_spec.size() != 2) {
            throw CLI::ValidationError("dcolor-matrix needs --edge U V or --all-edges");
        }
        edges.push_back(cg::make_edge(edge_spec[0], edge_spec[1]));
    }

    bool all_found = true;
    nlohmann::json results = nlohmann::json::array();
    for (const cg::Edge& e : edges) {
        nlohmann::json entry{{"edge", {e.u, e.v}}};
        auto base = cg::find_d_coloring(g, e);
        entry["found"] = base.has_value();
        if (base) {
            cg::SymMatrix l = cg::deng::d_coloring_matrix(g, *base, e);
            entry["coloring"] = base->assignment;
            entry["corner"] = l(l.dim() - 1, l.dim() - 1);
            entry["min_eigenvalue"] = l.min_eigenvalue();
            if (!csv_dir.empty()) {
                fs::create_directories(csv_dir);
                std::string path =
                    (fs::path(csv_dir) /
                     ("L_" + std::to_string(e.u) + "_" + std::to_string(e.v) + ".csv"))
                        .string();
                cg::save_matrix_csv(path, l.dense());
                g_recorder.record_output(path);
                entry["csv"] = path;
            }
        } else {
            all_found = false;
        }
        results.push_back(std::move(entry));
    }
    nlohmann::json doc{{"graph", cg::graph_to_json(g)}, {"matrices", results}};
    if (out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        write_text_file(out, doc.dump(2) + "\n");
    }
    return all_found ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 0; i < argc; ++i) {
        if (i) g_recorder.command_line += " ";
        g_recorder.command_line += argv[i];
    }

    CLI::App app{"verification toolkit for 3-coloring criticality claims and the Deng program"};
    app.set_version_flag("--version", kVersion);
    app.add_option("--manifest", g_recorder.manifest_path,
                   "write a run manifest (inputs, hashes, outputs, timing) to this file");
    app.require_subcommand(1);

    int max_n = cg::kMaxOracleVertices;
    int jobs = 1;
    bool human = false;

    // gen
    std::string gen_family, gen_out;
    std::optional<int> gen_n;
    auto* gen = app.add_subcommand("gen", "emit a named graph as canonical JSON");
    gen->add_option("family", gen_family, "k4|kite|moser|fn|counterexample")->required();
    gen->add_option("n", gen_n, "family parameter (fn, counterexample)");
    gen->add_option("-o,--out", gen_out, "output file (.json, .col)");

    // check
    std::string check_kind, check_graph, check_out;
    std::optional<int> check_k;
    auto* check = app.add_subcommand("check", "run a checker and emit its certificate");
    check->add_option("kind", check_kind,
                      "chi|k-colorable|d-graph|vertex-critical|induced-d-scan|edge-subgraph-d")
        ->required();
    check->add_option("graph", check_graph, "graph file (.json or .col)")->required();
    check->add_option("--k", check_k, "color count for k-colorable");
    check->add_option("--jobs", jobs, "worker cap for subset scans");
    check->add_option("--max-n", max_n, "refuse graphs larger than this");
    check->add_option("-o,--out", check_out, "certificate file");
    check->add_flag("--human", human, "print a summary instead of JSON");

    // refute-lemma3
    int refute_from = 1, refute_to = 2;
    std::string refute_out;
    auto* refute = app.add_subcommand(
        "refute-lemma3", "criticality + induced-D-scan table over the counterexample family");
    refute->add_option("--from", refute_from, "first n");
    refute->add_option("--to", refute_to, "last n");
    refute->add_option("--jobs", jobs, "worker cap for subset scans");
    refute->add_option("--max-n", max_n, "vertex cap; larger rows are truncated");
    refute->add_option("-o,--out", refute_out, "write the JSON table here");
    refute->add_flag("--human", human, "print an aligned table");

    // deng
    auto* deng = app.add_subcommand("deng", "build, solve, verify the convex program");
    deng->require_subcommand(1);

    std::string build_graph, build_out, build_csv_dir;
    auto* build = deng->add_subcommand("build", "emit the instance bundle at the zero point");
    build->add_option("graph", build_graph)->required();
    build->add_option("-o,--out", build_out, "bundle file");
    build->add_option("--csv-dir", build_csv_dir, "also write C/D/P as CSV");
    build->add_option("--max-n", max_n);

    std::string solve_graph, solve_out_dir = ".", solve_name = "ray";
    cg::solver::SolveConfig cfg;
    cfg.seed = default_seed();
    auto* solve = deng->add_subcommand("solve", "search for a feasible negative ray");
    solve->add_option("graph", solve_graph)->required();
    solve->add_option("--iters", cfg.max_iters, "subgradient iterations per restart");
    solve->add_option("--restarts", cfg.restarts);
    solve->add_option("--seed", cfg.seed, "overrides CRITGRAPH_SEED");
    solve->add_option("--delta", cfg.delta, "negativity threshold");
    solve->add_option("--rho", cfg.rho, "Frobenius search radius");
    solve->add_option("--step0", cfg.step0);
    solve->add_option("--inner-cap", cfg.inner_cap, "projection cycles per step");
    solve->add_option("--jobs", cfg.jobs, "parallel restarts");
    solve->add_option("--out-dir", solve_out_dir);
    solve->add_option("--name", solve_name, "certificate/matrix file stem");
    solve->add_option("--max-n", max_n);
    solve->add_flag("--human", human);

    std::string verify_cert;
    auto* verify = deng->add_subcommand("verify", "revalidate a certificate from disk");
    verify->add_option("certificate", verify_cert)->required();

    // dcolor-matrix
    std::string dcm_graph, dcm_csv_dir, dcm_out;
    std::vector<int> dcm_edge;
    bool dcm_all = false;
    auto* dcm = app.add_subcommand("dcolor-matrix", "D-coloring matrices for graph edges");
    dcm->add_option("graph", dcm_graph)->required();
    dcm->add_option("--edge", dcm_edge, "edge endpoints U V")->expected(2);
    dcm->add_flag("--all-edges", dcm_all);
    dcm->add_option("--csv-dir", dcm_csv_dir, "write each L as CSV");
    dcm->add_option("-o,--out", dcm_out);
    dcm->add_option("--max-n", max_n);

    int code = 2;
    try {
        app.parse(argc, argv);
        if (gen->parsed()) {
            code = cmd_gen(gen_family, gen_n, gen_out);
        } else if (check->parsed()) {
            code = cmd_check(check_kind, check_graph, check_k, jobs, max_n, check_out, human);
        } else if (refute->parsed()) {
            code = cmd_refute_lemma3(refute_from, refute_to, jobs, max_n, human, refute_out);
        } else if (deng->parsed()) {
            if (build->parsed()) {
                code = cmd_deng_build(build_graph, max_n, build_out, build_csv_dir);
            } else if (solve->parsed()) {
                code = cmd_deng_solve(solve_graph, cfg, max_n, solve_out_dir, solve_name, human);
            } else if (verify->parsed()) {
                code = cmd_deng_verify(verify_cert);
            }
        } else if (dcm->parsed()) {
            code = cmd_dcolor_matrix(dcm_graph, dcm_edge, dcm_all, max_n, dcm_csv_dir, dcm_out);
        }
    } catch (const CLI::ParseError& e) {
        int parse_code = app.exit(e);
        return parse_code == 0 ? 0 : 2;  // --help/--version exit 0, usage errors exit 2
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    g_recorder.write();
    return code;
}
