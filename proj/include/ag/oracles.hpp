#ifndef AG_ORACLES_HPP
#define AG_ORACLES_HPP

#include <optional>

#include "ag/graph.hpp"

namespace ag {

// Guards for the brute-force layer. Exceeding a guard is a capacity error,
// never a silent approximation. Tier 1 is plain subset enumeration (the root
// of trust, lexicographically smallest witness); tier 2 is a deliberately
// plain branch-and-bound kept independent of the solver modules and
// validated against tier 1 before use at larger sizes.
struct OracleConfig {
    int enum_limit = 16;      // subset enumeration (vc, independent set, fvs)
    int vc_bb_limit = 40;     // tier-2 vertex cover branch and bound
    int cvd_enum_limit = 14;  // cluster deletion enumeration
    int cvd_bb_limit = 64;    // tier-2 cluster deletion branching
    long long subset_budget = 1'000'000'000;  // dist-to-Kr-free work guard
    long long node_budget = 500'000'000;      // tier-2 node guard
};

struct OracleValue {
    int value = 0;
    VertexSet witness;
};

OracleValue brute_min_vertex_cover(const Graph& g, const OracleConfig& cfg = {});
OracleValue brute_max_independent_set(const Graph& g, const OracleConfig& cfg = {});
OracleValue brute_min_fvs(const Graph& g, const OracleConfig& cfg = {});
OracleValue brute_cluster_deletion_number(const Graph& g, const OracleConfig& cfg = {});
OracleValue brute_distance_to_kr_free(const Graph& g, int r, const OracleConfig& cfg = {});

// Size-capped enumeration for decision questions on graphs too large for the
// full minimization guard: searches sizes 0..cap and reports nullopt when
// every such subset fails. Guarded by cfg.subset_budget.
std::optional<OracleValue> brute_min_vertex_cover_capped(const Graph& g, int cap,
                                                         const OracleConfig& cfg = {});
std::optional<OracleValue> brute_min_fvs_capped(const Graph& g, int cap,
                                                const OracleConfig& cfg = {});

}  // namespace ag

#endif
