#ifndef AG_VERIFY_HPP
#define AG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ag/graph.hpp"

namespace ag {

struct CheckResult {
    std::string id;
    bool passed = false;
    bool skipped = false;  // guard exhausted; reported, never counted as pass
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int count = 0;
    std::vector<CheckResult> checks;

    int failures() const;
    int skips() const;
    bool all_passed() const { return failures() == 0; }
};

// Randomized suites. Instances are derived deterministically from the seed;
// every check id records the per-instance seed for replay.
SuiteReport suite_solver_oracle(std::uint64_t seed, int count);
SuiteReport suite_above_guarantee(std::uint64_t seed, int count);
SuiteReport suite_planar_bounds(std::uint64_t seed, int count);
SuiteReport suite_thm5(std::uint64_t seed, int count);
SuiteReport suite_cor6(std::uint64_t seed, int count);
SuiteReport suite_thm7(std::uint64_t seed, int count);
SuiteReport suite_construction1(std::uint64_t seed, int count);
SuiteReport suite_thm9(std::uint64_t seed, int count);
SuiteReport suite_hierarchy(std::uint64_t seed, int count);
SuiteReport oracle_self_validation(std::uint64_t seed, int count);

// The large unsatisfiable-formula cover bound (186 gadget vertices, budget
// 121): prove the budget cannot be met within the given wall-clock
// allowance. Reports a skip if the allowance runs out.
SuiteReport construction1_unsat_bound(double time_budget_seconds);

// CLI dispatch: solvers, thm5, cor6, thm7, construction1, thm9, hierarchy.
// count <= 0 selects the suite default.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int count);
std::vector<std::string> suite_names();

}  // namespace ag

#endif
