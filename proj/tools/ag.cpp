// Command-line front end: parameter reports, exact solves, certified
// instance generation, brute-force oracles, and randomized verification
// suites. JSON goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 capacity guard exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ag/fvs.hpp"
#include "ag/io.hpp"
#include "ag/oracles.hpp"
#include "ag/params.hpp"
#include "ag/planar.hpp"
#include "ag/reductions.hpp"
#include "ag/vc.hpp"
#include "ag/verify.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json base_report(const std::string& input_bytes) {
    return json{{"version", kVersion}, {"input_hash", fnv1a_hex(input_bytes)}};
}

json solve_json(const ag::SolveResult& r) {
    json out;
    out["feasible"] = r.feasible;
    if (r.certificate)
        out["certificate"] = *r.certificate;
    else
        out["certificate"] = nullptr;
    out["nodes"] = r.nodes_explored;
    out["time_ms"] = r.time_ms;
    return out;
}

long long env_work_budget() {
    if (const char* v = std::getenv("AG_WORK_BUDGET")) {
        char* end = nullptr;
        long long parsed = std::strtoll(v, &end, 10);
        if (end && *end == '\0' && parsed > 0) return parsed;
        std::cerr << "ignoring malformed AG_WORK_BUDGET\n";
    }
    return 0;
}

int cmd_params(const std::string& path) {
    std::string bytes = ag::read_file(path);
    ag::Graph g = ag::parse_graph(bytes);
    json out = base_report(bytes);
    out["n"] = g.num_vertices();
    out["m"] = g.num_edges();
    if (g.num_vertices() > 0) {
        auto [lo, hi] = ag::degree_profile(g);
        out["min_degree"] = lo;
        out["max_degree"] = hi;
    }
    ag::HIndex h = ag::h_index(g);
    out["h_index"] = h.value;
    out["degeneracy"] = ag::degeneracy_core(g).degeneracy;
    try {
        out["clique_number"] = ag::clique_number(g).size;
    } catch (const ag::capacity_error&) {
        std::cerr << "clique number skipped: graph exceeds the size guard\n";
    }
    try {
        out["treewidth"] = ag::treewidth_exact(g);
    } catch (const ag::capacity_error&) {
        std::cerr << "treewidth skipped: graph exceeds the size guard\n";
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_solve(const std::string& problem, const std::string& path, int k,
              const std::string& mode) {
    std::string bytes = ag::read_file(path);
    ag::Graph g = ag::parse_graph(bytes);
    json out = base_report(bytes);

    if (problem == "vc") {
        if (mode == "plain") {
            ag::SolveResult r = ag::vc_decide(g, k);
            out.update(solve_json(r));
            out["parameter"] = {{"k", k}};
        } else if (mode == "h-index") {
            ag::BranchingResult r = ag::vc_above_h_index(g, k);
            out.update(solve_json(r.result));
            out["parameter"] = {{"k", k}, {"h", r.guarantee}, {"ell", r.ell}};
            out["subcall_budgets"] = r.subcall_budgets;
        } else if (mode == "treewidth-planar") {
            ag::PlanarVcResult r = ag::vc_above_treewidth_planar(g, k);
            out.update(solve_json(r.result));
            out["parameter"] = {{"k", k}, {"tw", r.report.treewidth}, {"ell", r.report.ell}};
            out["width"] = r.report.treewidth;
            out["branchwidth_lb"] = r.report.branchwidth_lb;
            out["r"] = r.report.vc_lower_bound;
            out["rejected"] = r.report.rejected;
            out["ell"] = r.report.ell;
        } else {
            throw CLI::ValidationError("--above " + mode + " is not a vertex cover mode");
        }
    } else if (problem == "fvs") {
        if (mode == "plain") {
            ag::SolveResult r = ag::fvs_decide(g, k);
            out.update(solve_json(r));
            out["parameter"] = {{"k", k}};
        } else if (mode == "degeneracy") {
            ag::BranchingResult r = ag::fvs_above_degeneracy(g, k);
            out.update(solve_json(r.result));
            out["parameter"] = {{"k", k}, {"d", r.guarantee}, {"ell", r.ell}};
            out["subcall_budgets"] = r.subcall_budgets;
        } else {
            throw CLI::ValidationError("--above " + mode + " is not a feedback vertex set mode");
        }
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_oracle(const std::string& param, const std::string& path, int r) {
    std::string bytes = ag::read_file(path);
    ag::Graph g = ag::parse_graph(bytes);
    ag::OracleConfig cfg;
    if (long long budget = env_work_budget()) cfg.subset_budget = budget;
    ag::OracleValue val;
    if (param == "vc")
        val = ag::brute_min_vertex_cover(g, cfg);
    else if (param == "is")
        val = ag::brute_max_independent_set(g, cfg);
    else if (param == "fvs")
        val = ag::brute_min_fvs(g, cfg);
    else if (param == "cvd")
        val = ag::brute_cluster_deletion_number(g, cfg);
    else if (param == "dist-kr")
        val = ag::brute_distance_to_kr_free(g, r, cfg);
    json out = base_report(bytes);
    out["value"] = val.value;
    out["witness"] = val.witness;
    std::cout << out.dump(2) << '\n';
    return 0;
}

json gadget_map_json(const ag::ReductionArtifact& art) {
    json arr = json::array();
    for (size_t v = 0; v < art.gadget_map.size(); ++v) {
        const auto& label = art.gadget_map[v];
        json entry{{"v", v}, {"kind", label.kind}};
        if (label.a >= 0) entry["a"] = label.a;
        if (label.b >= 0) entry["b"] = label.b;
        if (label.c >= 0) entry["c"] = label.c;
        arr.push_back(entry);
    }
    return arr;
}

int cmd_reduce(const std::string& name, const std::string& path, int k, int r,
               const std::string& out_path) {
    std::string bytes = ag::read_file(path);
    ag::ReductionArtifact art;
    if (name == "clique-complement")
        art = ag::clique_to_vc_complement(ag::parse_graph(bytes), k);
    else if (name == "vc-fvs-triangle")
        art = ag::vc_to_fvs_triangles(ag::parse_graph(bytes), k);
    else if (name == "is-krfree")
        art = ag::is_to_vc_above_krfree(ag::parse_graph(bytes), k, r);
    else if (name == "sat-cvd")
        art = ag::sat3_to_vc_above_cvd(ag::parse_cnf(bytes), false);
    else if (name == "sat-cvd-extended")
        art = ag::sat3_to_vc_above_cvd(ag::parse_cnf(bytes), true);
    else if (name == "fvs-below-vc")
        art = ag::fvs_to_fvs_below_vc(ag::parse_graph(bytes), k);

    std::ofstream graph_out(out_path);
    if (!graph_out) throw ag::input_error("cannot write " + out_path);
    graph_out << ag::to_dimacs(art.graph);

    json side = base_report(bytes);
    side["budget"] = art.budget;
    side["certificates"] = json::object();
    for (const auto& [cname, set] : art.certificates) side["certificates"][cname] = set;
    side["claimed_params"] = art.claimed_params;
    side["gadget_map"] = gadget_map_json(art);
    std::ofstream side_out(out_path + ".json");
    if (!side_out) throw ag::input_error("cannot write " + out_path + ".json");
    side_out << side.dump(2) << '\n';

    json summary = base_report(bytes);
    summary["output"] = out_path;
    summary["sidecar"] = out_path + ".json";
    summary["n"] = art.graph.num_vertices();
    summary["m"] = art.graph.num_edges();
    summary["budget"] = art.budget;
    std::cout << summary.dump(2) << '\n';
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int count) {
    ag::SuiteReport rep = ag::run_suite(suite, seed, count);
    json out = {{"version", kVersion},
                {"input_hash", fnv1a_hex(suite + ":" + std::to_string(seed) + ":" +
                                         std::to_string(count))}};
    out["suite"] = rep.suite;
    out["seed"] = rep.seed;
    out["count"] = rep.count;
    out["checks"] = json::array();
    for (const auto& c : rep.checks)
        out["checks"].push_back({{"id", c.id},
                                 {"passed", c.passed},
                                 {"skipped", c.skipped},
                                 {"detail", c.detail}});
    out["failures"] = rep.failures();
    out["skips"] = rep.skips();
    std::cout << out.dump(2) << '\n';
    return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact vertex cover / feedback vertex set toolkit with "
                 "above-guarantee branching, certified reductions, and "
                 "brute-force verification"};
    app.require_subcommand(1);

    std::string path, problem, mode = "plain", reduction, suite, out_path;
    int k = 0, r = 3, count = 0;
    std::uint64_t seed = 1;

    auto* params_cmd = app.add_subcommand("params", "structural parameter report");
    params_cmd->add_option("file", path, "graph file")->required();

    auto* solve_cmd = app.add_subcommand("solve", "exact decision with optional branching mode");
    solve_cmd->add_option("problem", problem, "vc or fvs")
        ->required()
        ->check(CLI::IsMember({"vc", "fvs"}));
    solve_cmd->add_option("file", path, "graph file")->required();
    solve_cmd->add_option("-k,--budget", k, "solution size budget")->required();
    solve_cmd->add_option("--above", mode, "h-index | degeneracy | treewidth-planar")
        ->check(CLI::IsMember({"h-index", "degeneracy", "treewidth-planar"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
    oracle_cmd->add_option("param", problem, "vc | is | fvs | cvd | dist-kr")
        ->required()
        ->check(CLI::IsMember({"vc", "is", "fvs", "cvd", "dist-kr"}));
    oracle_cmd->add_option("file", path, "graph file")->required();
    oracle_cmd->add_option("-r,--order", r, "clique order for dist-kr (default 3)");

    auto* reduce_cmd = app.add_subcommand("reduce", "certified instance generators");
    reduce_cmd
        ->add_option("name", reduction,
                     "clique-complement | vc-fvs-triangle | is-krfree | sat-cvd | "
                     "sat-cvd-extended | fvs-below-vc")
        ->required()
        ->check(CLI::IsMember({"clique-complement", "vc-fvs-triangle", "is-krfree", "sat-cvd",
                               "sat-cvd-extended", "fvs-below-vc"}));
    reduce_cmd->add_option("file", path, "graph or cnf input")->required();
    reduce_cmd->add_option("-k,--budget", k, "size parameter of the source instance");
    reduce_cmd->add_option("-r,--order", r, "clique order for is-krfree (default 3)");
    reduce_cmd->add_option("-o,--output", out_path, "output graph file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "randomized verification suites");
    verify_cmd->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(ag::suite_names()));
    verify_cmd->add_option("--seed", seed, "master seed (default 1)");
    verify_cmd->add_option("--count", count, "instance count (0 = suite default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (params_cmd->parsed()) return cmd_params(path);
        if (solve_cmd->parsed()) return cmd_solve(problem, path, k, mode);
        if (oracle_cmd->parsed()) return cmd_oracle(problem, path, r);
        if (reduce_cmd->parsed()) return cmd_reduce(reduction, path, k, r, out_path);
        if (verify_cmd->parsed()) return cmd_verify(suite, seed, count);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ag::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 3;
    } catch (const ag::input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
