#include "ag/verify.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

#include "ag/fvs.hpp"
#include "ag/io.hpp"
#include "ag/oracles.hpp"
#include "ag/params.hpp"
#include "ag/planar.hpp"
#include "ag/random.hpp"
#include "ag/reductions.hpp"
#include "ag/vc.hpp"

namespace ag {

namespace {

constexpr std::array<double, 3> kEdgeProbs{0.2, 0.5, 0.8};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string check_id(const std::string& suite, int i, std::uint64_t inst_seed) {
    std::ostringstream os;
    os << suite << '/' << std::setw(4) << std::setfill('0') << i << "/seed=" << inst_seed;
    return os.str();
}

struct Collector {
    SuiteReport report;

    void pass(std::string id, std::string detail = "") {
        report.checks.push_back({std::move(id), true, false, std::move(detail)});
    }
    void fail(std::string id, std::string detail) {
        report.checks.push_back({std::move(id), false, false, std::move(detail)});
    }
    void skip(std::string id, std::string detail) {
        report.checks.push_back({std::move(id), false, true, std::move(detail)});
    }

    // Runs one instance check; converts capacity errors into skips.
    template <typename F>
    void run(const std::string& id, F&& body) {
        try {
            std::string detail = body();
            if (detail.empty())
                pass(id);
            else
                fail(id, detail);
        } catch (const capacity_error& e) {
            skip(id, e.what());
        }
    }
};

bool is_cover_of(const Graph& g, const VertexSet& s) {
    std::vector<char> in(g.num_vertices(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.num_vertices()) return false;
        in[v] = 1;
    }
    for (auto [u, v] : g.edge_list())
        if (!in[u] && !in[v]) return false;
    return true;
}

bool is_fvs_of(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (v < 0 || v >= g.num_vertices()) return false;
    return is_acyclic(delete_vertices(g, s).graph);
}

std::string gadget_map_defect(const ReductionArtifact& art) {
    if (static_cast<int>(art.gadget_map.size()) != art.graph.num_vertices())
        return "gadget map covers " + std::to_string(art.gadget_map.size()) + " of " +
               std::to_string(art.graph.num_vertices()) + " vertices";
    for (const auto& label : art.gadget_map)
        if (label.kind.empty()) return "unlabeled vertex in gadget map";
    for (const auto& [name, set] : art.certificates)
        for (int v : set)
            if (v < 0 || v >= art.graph.num_vertices())
                return "certificate '" + name + "' out of range";
    return "";
}

Graph grid_graph(int rows, int cols) {
    std::vector<std::pair<int, int>> edges;
    auto id = [&](int i, int j) { return i * cols + j; };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols) edges.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < rows) edges.emplace_back(id(i, j), id(i + 1, j));
        }
    return Graph(rows * cols, edges);
}

CnfFormula complete_polarity_formula() {
    CnfFormula f;
    f.num_vars = 3;
    for (int mask = 0; mask < 8; ++mask) {
        std::array<int, 3> clause{};
        for (int j = 0; j < 3; ++j) clause[j] = (mask >> j) & 1 ? (j + 1) : -(j + 1);
        f.clauses.push_back(clause);
    }
    return f;
}

}  // namespace

int SuiteReport::failures() const {
    int c = 0;
    for (const auto& r : checks)
        if (!r.passed && !r.skipped) ++c;
    return c;
}

int SuiteReport::skips() const {
    int c = 0;
    for (const auto& r : checks)
        if (r.skipped) ++c;
    return c;
}

SuiteReport suite_solver_oracle(std::uint64_t seed, int count) {
    Collector col;
    col.report = {"solver_oracle", seed, count, {}};
    for (int i = 0; i < count; ++i) {
        std::uint64_t inst = mix_seed(seed, i);
        Rng rng(inst);
        int n = 1 + static_cast<int>(rng() % 12);
        double p = kEdgeProbs[i % kEdgeProbs.size()];
        Graph g = erdos_renyi(rng, n, p);
        col.run(check_id("solver_oracle", i, inst), [&]() -> std::string {
            std::ostringstream why;
            int vco = brute_min_vertex_cover(g).value;
            int fvso = brute_min_fvs(g).value;
            bool prev_vc = false, prev_fvs = false;
            for (int k = 0; k <= n; ++k) {
                SolveResult vr = vc_decide(g, k);
                if (vr.feasible != (k >= vco))
                    return "vc_decide(" + std::to_string(k) + ") disagrees with enumeration (vc=" +
                           std::to_string(vco) + ", n=" + std::to_string(n) + ")";
                if (vr.feasible) {
                    if (!vr.certificate || static_cast<int>(vr.certificate->size()) > k ||
                        !is_cover_of(g, *vr.certificate))
                        return "vc certificate invalid at k=" + std::to_string(k);
                }
                if (prev_vc && !vr.feasible) return "vc feasibility not monotone in k";
                prev_vc = vr.feasible;

                VcKernel kern = kernelize_vc(g, k);
                bool kern_feasible =
                    !kern.infeasible && vc_decide(kern.graph, kern.budget).feasible;
                if (kern_feasible != vr.feasible)
                    return "kernelize-then-decide differs at k=" + std::to_string(k);

                SolveResult fr = fvs_decide(g, k);
                if (fr.feasible != (k >= fvso))
                    return "fvs_decide(" + std::to_string(k) +
                           ") disagrees with enumeration (fvs=" + std::to_string(fvso) + ")";
                if (fr.feasible) {
                    if (!fr.certificate || static_cast<int>(fr.certificate->size()) > k ||
                        !is_fvs_of(g, *fr.certificate))
                        return "fvs certificate invalid at k=" + std::to_string(k);
                }
                if (prev_fvs && !fr.feasible) return "fvs feasibility not monotone in k";
                prev_fvs = fr.feasible;
            }
            return "";
        });
    }
    return col.report;
}

SuiteReport suite_above_guarantee(std::uint64_t seed, int count) {
    Collector col;
    col.report = {"above_guarantee", seed, count, {}};
    for (int i = 0; i < count; ++i) {
        std::uint64_t inst = mix_seed(seed, i);
        Rng rng(inst);
        int n = 1 + static_cast<int>(rng() % 12);
        double p = kEdgeProbs[i % kEdgeProbs.size()];
        Graph g = erdos_renyi(rng, n, p);
        col.run(check_id("above_guarantee", i, inst), [&]() -> std::string {
            bool planar = check_planar(g).planar;
            for (int k = 0; k <= n; ++k) {
                SolveResult plain_vc = vc_decide(g, k);
                BranchingResult hres = vc_above_h_index(g, k);
                if (hres.result.feasible != plain_vc.feasible)
                    return "h-index branching decision differs at k=" + std::to_string(k);
                for (int b : hres.subcall_budgets)
                    if (b > k - hres.guarantee)
                        return "h-index subcall budget " + std::to_string(b) + " exceeds k-h=" +
                               std::to_string(k - hres.guarantee);
                if (hres.result.feasible &&
                    (!hres.result.certificate ||
                     static_cast<int>(hres.result.certificate->size()) > k ||
                     !is_cover_of(g, *hres.result.certificate)))
                    return "h-index branching certificate invalid at k=" + std::to_string(k);

                SolveResult plain_fvs = fvs_decide(g, k);
                BranchingResult dres = fvs_above_degeneracy(g, k);
                if (dres.result.feasible != plain_fvs.feasible)
                    return "degeneracy branching decision differs at k=" + std::to_string(k);
                for (int b : dres.subcall_budgets)
                    if (b > k - dres.guarantee + 1)
                        return "degeneracy subcall budget " + std::to_string(b) +
                               " exceeds k-d+1=" + std::to_string(k - dres.guarantee + 1);
                long long core_size = degeneracy_core(g).core.size();
                if (dres.cases_enumerated > core_size * core_size + 1)
                    return "degeneracy branching enumerated too many cases";
                if (dres.result.feasible &&
                    (!dres.result.certificate ||
                     static_cast<int>(dres.result.certificate->size()) > k ||
                     !is_fvs_of(g, *dres.result.certificate)))
                    return "degeneracy branching certificate invalid at k=" + std::to_string(k);

                if (planar) {
                    PlanarVcResult pres = vc_above_treewidth_planar(g, k);
                    if (pres.result.feasible != plain_vc.feasible)
                        return "planar width mode decision differs at k=" + std::to_string(k);
                    if (pres.report.rejected && plain_vc.feasible)
                        return "planar width mode rejected a feasible instance";
                }
            }
            return "";
        });
    }
    return col.report;
}

SuiteReport suite_planar_bounds(std::uint64_t seed, int count) {
    Collector col;
    col.report = {"planar_bounds", seed, count, {}};
    for (int i = 0; i < count; ++i) {
        std::uint64_t inst = mix_seed(seed, i);
        Rng rng(inst);
        int n = 3 + static_cast<int>(rng() % 18);  // 3..20
        double keep = 0.5 + 0.1 * static_cast<double>(rng() % 5);
        Graph g = random_planar(rng, n, keep);
        col.run(check_id("planar_bounds", i, inst), [&]() -> std::string {
            int tw = treewidth_exact(g);
            int beta_lb = (2 * (tw + 1) + 2) / 3;
            int r = grid_vc_lower_bound(beta_lb);
            int vco = vc_optimum(g).size;
            if (r > vco)
                return "width-derived bound r=" + std::to_string(r) + " exceeds vc=" +
                       std::to_string(vco);
            int k = static_cast<int>(rng() % (n + 1));
            PlanarVcResult res = vc_above_treewidth_planar(g, k);
            if (res.report.rejected && k >= vco) return "rejected a feasible budget";
            if (res.result.feasible != (k >= vco))
                return "planar mode decision differs from optimum at k=" + std::to_string(k);
            return "";
        });
    }
    // grid anchor: a g x g grid needs at least g*floor(g/2) cover vertices
    for (int gsz = 2; gsz <= 5; ++gsz) {
        std::string id = "planar_bounds/grid-" + std::to_string(gsz);
        col.run(id, [&]() -> std::string {
            Graph grid = grid_graph(gsz, gsz);
            int vco = vc_optimum(grid).size;
            if (vco < gsz * (gsz / 2))
                return "grid cover " + std::to_string(vco) + " below row bound " +
                       std::to_string(gsz * (gsz / 2));
            return "";
        });
    }
    return col.report;
}

SuiteReport suite_thm5(std::uint64_t seed, int count) {
    Collector col;
    col.report = {"thm5", seed, count, {}};
    for (int i = 0; i < count; ++i) {
        std::uint64_t inst = mix_seed(seed, i);
        Rng rng(inst);
        int n = 1 + static_cast<int>(rng() % 8);
        double p = kEdgeProbs[i % kEdgeProbs.size()];
        Graph g = erdos_renyi(rng, n, p);
        int k = static_cast<int>(rng() % (n + 1));
        col.run(check_id("thm5", i, inst), [&]() -> std::string {
            ReductionArtifact art = clique_to_vc_complement(g, k);
            if (auto defect = gadget_map_defect(art); !defect.empty()) return defect;
            Graph comp = art.graph;
            int omega_g = brute_max_independent_set(comp).value;  // cliques of g
            bool lhs = omega_g >= k;
            int vc_comp = brute_min_vertex_cover(comp).value;
            bool rhs = vc_comp <= art.budget;
            if (lhs != rhs) return "clique/cover equivalence fails at k=" + std::to_string(k);
            int delta_comp = degree_profile(comp).first;
            int Delta_g = degree_profile(g).second;
            if (art.budget - delta_comp > Delta_g)
                return "min-degree parameter bound violated";
            int omega_comp = brute_max_independent_set(g).value;  // cliques of comp
            int vc_g = brute_min_vertex_cover(g).value;
            if (art.budget - omega_comp > vc_g) return "clique-number parameter bound violated";
            return "";
        });
    }
    return col.report;
}

SuiteReport suite_cor6(std::uint64_t seed, int count) {
    Collector col;
    col.report = {"cor6", seed, count, {}};
    for (int i = 0; i < count; ++i) {
        std::uint64_t inst = mix_seed(seed, i);
        Rng rng(inst);
        int n = 1 + static_cast<int>(rng() % 7);
        double p = kEdgeProbs[i % kEdgeProbs.size()];
        Graph g = erdos_renyi(rng, n, p);
        int ell = static_cast<int>(rng() % (n + 1));
        col.run(check_id("cor6", i, inst), [&]() -> std::string {
            ReductionArtifact art = vc_to_fvs_triangles(g, ell);
            if (auto defect = gadget_map_defect(art); !defect.empty()) return defect;
            if (art.graph.num_vertices() != g.num_vertices() + g.num_edges())
                return "vertex count is not n + m";
            bool lhs = brute_min_vertex_cover(g).value <= ell;
            bool rhs = brute_min_fvs_capped(art.graph, ell).has_value();
            if (lhs != rhs)
                return "cover/feedback equivalence fails at ell=" + std::to_string(ell);
            CliqueWitness omega_g = clique_number(g);
            if (omega_g.size >= 3) {
                CliqueWitness omega_out = clique_number(art.graph);
                if (omega_out.size != omega_g.size)
                    return "clique number changed from " + std::to_string(omega_g.size) + " to " +
                           std::to_string(omega_out.size);
            }
            return "";
        });
    }
    return col.report;
}

SuiteReport suite_thm7(std::uint64_t seed, int count) {
    Collector col;
    col.report = {"thm7", seed, count, {}};
    OracleConfig big;
    big.vc_bb_limit = 64;
    for (int i = 0; i < count; ++i) {
        std::uint64_t inst = mix_seed(seed, i);
        Rng rng(inst);
        int n = 1 + static_cast<int>(rng() % 5);
        int k = 1 + static_cast<int>(rng() % 2);
        double p = kEdgeProbs[i % kEdgeProbs.size()];
        Graph g = erdos_renyi(rng, n, p);
        col.run(check_id("thm7", i, inst), [&]() -> std::string {
            ReductionArtifact art = is_to_vc_above_krfree(g, k, 3);
            if (auto defect = gadget_map_defect(art); !defect.empty()) return defect;
            if (art.claimed_params.at("ell") != art.claimed_params.at("ell_alt"))
                return "budget forms disagree";
            int alpha = brute_max_independent_set(g).value;
            bool lhs = alpha >= k;
            int vc_out = brute_min_vertex_cover(art.graph, big).value;
            bool rhs = vc_out <= art.budget;
            if (lhs != rhs)
                return "independent-set/cover equivalence fails (alpha=" + std::to_string(alpha) +
                       ", k=" + std::to_string(k) + ", vc'=" + std::to_string(vc_out) +
                       ", ell=" + std::to_string(art.budget) + ")";
            SolveResult solver_side = vc_decide(art.graph, static_cast<int>(art.budget));
            if (solver_side.feasible != rhs) return "solver disagrees with oracle tier on output";
            long long nk = static_cast<long long>(n) * k;
            OracleValue dist = brute_distance_to_kr_free(art.graph, 3);
            if (dist.value != nk)
                return "distance to triangle-free is " + std::to_string(dist.value) + ", not " +
                       std::to_string(nk);
            const VertexSet& dset = art.certificates.at("designated_deletion_set");
            if (static_cast<long long>(dset.size()) != nk) return "designated set size is not nk";
            if (has_kr(delete_vertices(art.graph, dset).graph, 3))
                return "designated set leaves a triangle";
            return "";
        });
    }
    return col.report;
}

SuiteReport suite_construction1(std::uint64_t seed, int count) {
    Collector col;
    col.report = {"construction1", seed, count, {}};
    OracleConfig big;
    big.vc_bb_limit = 128;
    for (int i = 0; i < count; ++i) {
        std::uint64_t inst = mix_seed(seed, i);
        Rng rng(inst);
        col.run(check_id("construction1", i, inst), [&]() -> std::string {
            CnfFormula phi;
            std::optional<std::vector<bool>> assignment;
            for (int tries = 0; tries < 64; ++tries) {
                int nv = 3 + static_cast<int>(rng() % 2);
                int m = 1 + static_cast<int>(rng() % 3);
                phi = random_3cnf(rng, nv, m, true);
                assignment = find_satisfying_assignment(phi);
                if (assignment) break;
            }
            if (!assignment) return "failed to sample a satisfiable formula";
            int m = static_cast<int>(phi.clauses.size());
            ReductionArtifact art = sat3_to_vc_above_cvd(phi, false);
            if (auto defect = gadget_map_defect(art); !defect.empty()) return defect;
            long long expected = 14LL * m + 3LL * phi.num_vars;
            if (art.budget != expected) return "budget is not 14m + 3n";
            if (art.graph.num_vertices() != 21 * m + 6 * phi.num_vars)
                return "vertex count is not 21m + 6n";
            VertexSet cover = sat_cvd_cover_from_assignment(phi, *assignment);
            if (static_cast<long long>(cover.size()) != expected)
                return "assignment cover has size " + std::to_string(cover.size());
            if (!is_cover_of(art.graph, cover)) return "assignment cover misses an edge";
            int vc_out = brute_min_vertex_cover(art.graph, big).value;
            if (vc_out != expected)
                return "optimum cover is " + std::to_string(vc_out) + ", not " +
                       std::to_string(expected);
            return "";
        });
    }

    // gadget-structure run on fixed one-clause formulas: the minimum cluster
    // deletion set must take two full sides of the clause gadget, one full
    // side of every variable gadget, and equal a minimum vertex cover
    std::array<std::array<int, 3>, 3> polarities{{{1, 2, 3}, {-1, 2, -3}, {-1, -2, -3}}};
    for (size_t pi = 0; pi < polarities.size(); ++pi) {
        std::string id = "construction1/lemmas-" + std::to_string(pi);
        col.run(id, [&]() -> std::string {
            CnfFormula phi;
            phi.num_vars = 3;
            phi.clauses.push_back(polarities[pi]);
            ReductionArtifact art = sat3_to_vc_above_cvd(phi, false);
            OracleValue cvd = brute_cluster_deletion_number(art.graph);
            OracleConfig big2;
            big2.vc_bb_limit = 64;
            OracleValue vc = brute_min_vertex_cover(art.graph, big2);
            if (cvd.value != vc.value || cvd.value != art.budget)
                return "cvd=" + std::to_string(cvd.value) + " vc=" + std::to_string(vc.value) +
                       " budget=" + std::to_string(art.budget);
            if (!is_cover_of(art.graph, cvd.witness))
                return "minimum cluster deletion set is not a vertex cover";
            std::vector<char> in_x(art.graph.num_vertices(), 0);
            for (int v : cvd.witness) in_x[v] = 1;
            // clause gadget: count fully-taken sides
            int full = 0, untouched = 0;
            for (int r = 1; r <= 3; ++r) {
                int taken = 0;
                for (int s = 1; s <= 7; ++s) taken += in_x[(r - 1) * 7 + (s - 1)];
                if (taken == 7) ++full;
                if (taken == 0) ++untouched;
            }
            if (full != 2 || untouched != 1)
                return "clause gadget sides: " + std::to_string(full) + " full, " +
                       std::to_string(untouched) + " untouched";
            for (int j = 0; j < 3; ++j) {
                int sides_full = 0, total = 0;
                for (int r = 1; r <= 2; ++r) {
                    int taken = 0;
                    for (int s = 1; s <= 3; ++s) taken += in_x[21 + j * 6 + (r - 1) * 3 + (s - 1)];
                    if (taken == 3) ++sides_full;
                    total += taken;
                }
                if (sides_full != 1 || total != 3)
                    return "variable gadget " + std::to_string(j) + " not one full side";
            }
            return "";
        });
    }

    // extended variant arithmetic on an already-divisible input
    col.run("construction1/extended", [&]() -> std::string {
        CnfFormula phi;
        phi.num_vars = 3;
        for (int c = 0; c < 3; ++c) phi.clauses.push_back({1, 2, 3});
        ReductionArtifact art = sat3_to_vc_above_cvd(phi, true);
        if (auto defect = gadget_map_defect(art); !defect.empty()) return defect;
        if (art.claimed_params.at("t_size") != 7 * 3 + 3 * 3) return "t block has wrong size";
        if (art.graph.num_vertices() != 21 * 3 + 6 * 3 + 30) return "extended vertex count wrong";
        if (art.budget != 21 * 3 + 6 * 3) return "extended budget wrong";
        const VertexSet& base = art.certificates.at("cluster_deletion_set");
        if (!is_cluster(delete_vertices(art.graph, base).graph))
            return "base copy does not cluster the extended graph";
        return "";
    });
    return col.report;
}

SuiteReport construction1_unsat_bound(double time_budget_seconds) {
    Collector col;
    col.report = {"construction1_unsat", 0, 1, {}};
    col.run("construction1/unsat-bound", [&]() -> std::string {
        CnfFormula phi = complete_polarity_formula();
        if (find_satisfying_assignment(phi)) return "complete polarity family is satisfiable?";
        ReductionArtifact art = sat3_to_vc_above_cvd(phi, false);
        if (art.graph.num_vertices() != 186 || art.budget != 121)
            return "unexpected instance shape";
        SolverLimits limits;
        limits.max_seconds = time_budget_seconds;
        SolveResult res = vc_decide(art.graph, static_cast<int>(art.budget), limits);
        if (res.feasible) return "found a cover within the budget on an unsatisfiable instance";
        return "";
    });
    return col.report;
}

SuiteReport suite_thm9(std::uint64_t seed, int count) {
    Collector col;
    col.report = {"thm9", seed, count, {}};
    for (int i = 0; i < count; ++i) {
        std::uint64_t inst = mix_seed(seed, i);
        Rng rng(inst);
        col.run(check_id("thm9", i, inst), [&]() -> std::string {
            Graph g;
            for (int tries = 0; tries < 64 && g.num_edges() == 0; ++tries) {
                int n = 2 + static_cast<int>(rng() % 6);
                g = erdos_renyi(rng, n, kEdgeProbs[i % kEdgeProbs.size()]);
            }
            if (g.num_edges() == 0) return "failed to sample a graph with an edge";
            int n = g.num_vertices();
            int k = static_cast<int>(rng() % (n - 1));  // 0..n-2
            ReductionArtifact art = fvs_to_fvs_below_vc(g, k);
            if (auto defect = gadget_map_defect(art); !defect.empty()) return defect;
            if (art.graph.num_vertices() != 2 * n + (n - k - 2))
                return "host vertex count wrong";
            bool lhs = brute_min_fvs(g).value <= k;
            bool rhs = brute_min_fvs_capped(art.graph, n - 2).has_value();
            if (lhs != rhs) return "feedback equivalence fails at k=" + std::to_string(k);
            auto vc_h = brute_min_vertex_cover_capped(art.graph, n);
            if (!vc_h || vc_h->value != n)
                return "host cover number is not n=" + std::to_string(n);
            for (int leaf : art.certificates.at("leaves"))
                if (art.graph.degree(leaf) != 1) return "leaf with degree != 1";
            return "";
        });
    }
    return col.report;
}

SuiteReport suite_hierarchy(std::uint64_t seed, int count) {
    Collector col;
    col.report = {"hierarchy", seed, count, {}};
    for (int i = 0; i < count; ++i) {
        std::uint64_t inst = mix_seed(seed, i);
        Rng rng(inst);
        int n = 1 + static_cast<int>(rng() % 10);
        double p = kEdgeProbs[i % kEdgeProbs.size()];
        Graph g = erdos_renyi(rng, n, p);
        col.run(check_id("hierarchy", i, inst), [&]() -> std::string {
            int d = degeneracy_core(g).degeneracy;
            int h = h_index(g).value;
            auto [delta, Delta] = degree_profile(g);
            int omega = clique_number(g).size;
            int tw = treewidth_exact(g);
            int vc = brute_min_vertex_cover(g).value;
            int fvs = brute_min_fvs(g).value;
            int cvd = brute_cluster_deletion_number(g).value;
            int dist = brute_distance_to_kr_free(g, 3).value;
            if (d > h) return "degeneracy exceeds h-index";
            if (omega - 1 > d) return "clique number - 1 exceeds degeneracy";
            if (delta > d) return "min degree exceeds degeneracy";
            if (dist > fvs) return "triangle deletion exceeds feedback number";
            if (fvs > vc) return "feedback number exceeds cover number";
            if (h > vc) return "h-index exceeds cover number";
            if (cvd > vc) return "cluster deletion exceeds cover number";
            if (tw > fvs + 1) return "treewidth exceeds feedback number + 1";
            if (tw < d) return "treewidth below degeneracy";
            return "";
        });
    }
    return col.report;
}

SuiteReport oracle_self_validation(std::uint64_t seed, int count) {
    Collector col;
    col.report = {"oracle_self_validation", seed, count, {}};
    OracleConfig force_bb;
    force_bb.enum_limit = -1;
    force_bb.cvd_enum_limit = -1;
    for (int i = 0; i < count; ++i) {
        std::uint64_t inst = mix_seed(seed, i);
        Rng rng(inst);
        int n = 1 + static_cast<int>(rng() % 12);
        double p = kEdgeProbs[i % kEdgeProbs.size()];
        Graph g = erdos_renyi(rng, n, p);
        col.run(check_id("oracle_self_validation", i, inst), [&]() -> std::string {
            OracleValue enum_vc = brute_min_vertex_cover(g);
            OracleValue bb_vc = brute_min_vertex_cover(g, force_bb);
            if (enum_vc.value != bb_vc.value)
                return "cover tiers disagree: " + std::to_string(enum_vc.value) + " vs " +
                       std::to_string(bb_vc.value);
            if (!is_cover_of(g, bb_vc.witness) ||
                static_cast<int>(bb_vc.witness.size()) != bb_vc.value)
                return "tier-2 cover witness invalid";
            OracleValue enum_cvd = brute_cluster_deletion_number(g);
            OracleValue bb_cvd = brute_cluster_deletion_number(g, force_bb);
            if (enum_cvd.value != bb_cvd.value)
                return "cluster tiers disagree: " + std::to_string(enum_cvd.value) + " vs " +
                       std::to_string(bb_cvd.value);
            if (!is_cluster(delete_vertices(g, bb_cvd.witness).graph))
                return "tier-2 cluster witness invalid";
            return "";
        });
    }
    return col.report;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int count) {
    auto pick = [&](int fallback) { return count > 0 ? count : fallback; };
    if (name == "solvers") {
        SuiteReport a = suite_solver_oracle(seed, pick(100));
        SuiteReport b = suite_above_guarantee(seed, pick(100));
        a.suite = "solvers";
        a.checks.insert(a.checks.end(), b.checks.begin(), b.checks.end());
        return a;
    }
    if (name == "thm5") return suite_thm5(seed, pick(100));
    if (name == "cor6") return suite_cor6(seed, pick(100));
    if (name == "thm7") return suite_thm7(seed, pick(30));
    if (name == "construction1") return suite_construction1(seed, pick(20));
    if (name == "thm9") return suite_thm9(seed, pick(100));
    if (name == "hierarchy") return suite_hierarchy(seed, pick(200));
    throw input_error("unknown suite '" + name + "'");
}

std::vector<std::string> suite_names() {
    return {"solvers", "thm5", "cor6", "thm7", "construction1", "thm9", "hierarchy"};
}

}  // namespace ag
