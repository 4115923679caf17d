// Acceptance driver: one line per criterion, nonzero exit on any failure.
// Tier-2 oracle self-validation (criterion 9) runs before the suites that
// consume tier-2 results (criteria 5 and 6).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "ag/verify.hpp"

namespace {

constexpr std::uint64_t kSeed = 20260809;

struct CriterionLine {
    int criterion;
    bool pass;
    std::string note;
    double seconds;
};

std::vector<CriterionLine> lines;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report_failures(const ag::SuiteReport& rep, int max_shown = 5) {
    int shown = 0;
    for (const auto& c : rep.checks) {
        if (c.passed) continue;
        if (shown++ >= max_shown) {
            std::cerr << "  ...\n";
            break;
        }
        std::cerr << "  " << (c.skipped ? "[skip] " : "[fail] ") << c.id << ": " << c.detail
                  << '\n';
    }
}

void add(int criterion, const std::vector<ag::SuiteReport>& reps, const std::string& what) {
    double secs = 0;  // caller fills in; kept simple via wrapper below
    (void)secs;
    int failures = 0, skips = 0, total = 0;
    for (const auto& rep : reps) {
        failures += rep.failures();
        skips += rep.skips();
        total += static_cast<int>(rep.checks.size());
        if (rep.failures() > 0) report_failures(rep);
    }
    std::string note = what + ": " + std::to_string(total) + " checks, " +
                       std::to_string(failures) + " failures, " + std::to_string(skips) +
                       " skips";
    lines.push_back({criterion, failures == 0, note, 0.0});
}

template <typename F>
void run_criterion(int criterion, const std::string& what, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    add(criterion, body(), what);
    lines.back().seconds = seconds_since(t0);
}

}  // namespace

int main() {
    using ag::SuiteReport;

    run_criterion(1, "solver vs enumeration, 500 graphs, all budgets", [] {
        return std::vector<SuiteReport>{ag::suite_solver_oracle(kSeed, 500)};
    });

    run_criterion(2, "above-guarantee modes vs plain solver, budget instrumentation", [] {
        return std::vector<SuiteReport>{ag::suite_above_guarantee(kSeed, 500)};
    });

    run_criterion(3, "planar width bound validity, 200 graphs + grid anchors", [] {
        return std::vector<SuiteReport>{ag::suite_planar_bounds(kSeed, 200)};
    });

    run_criterion(4, "complement and triangle reductions, 100 + 100 instances", [] {
        return std::vector<SuiteReport>{ag::suite_thm5(kSeed, 100), ag::suite_cor6(kSeed, 100)};
    });

    run_criterion(9, "tier-2 oracle self-validation, 1000 graphs", [] {
        return std::vector<SuiteReport>{ag::oracle_self_validation(kSeed, 1000)};
    });

    run_criterion(5, "independent-set gadget suite, 30 instances", [] {
        return std::vector<SuiteReport>{ag::suite_thm7(kSeed, 30)};
    });

    // criterion 6: the sampled satisfiable formulas and the gadget-structure
    // checks must pass; for the unsatisfiable bound, either the direct solve
    // (10-minute allowance) or the cluster-deletion route must land
    {
        auto t0 = std::chrono::steady_clock::now();
        SuiteReport main6 = ag::suite_construction1(kSeed, 50);
        bool a_ok = true, bprime_ok = true, bprime_seen = false;
        for (const auto& c : main6.checks) {
            bool ok = c.passed;
            if (c.id.find("/lemmas-") != std::string::npos) {
                bprime_seen = true;
                bprime_ok = bprime_ok && ok;
            } else {
                a_ok = a_ok && ok;
            }
        }
        SuiteReport unsat = ag::construction1_unsat_bound(600.0);
        bool b_ok = unsat.failures() == 0 && unsat.skips() == 0;
        bool pass = a_ok && (b_ok || (bprime_seen && bprime_ok));
        if (!pass) {
            report_failures(main6);
            report_failures(unsat);
        }
        std::string note = "sat gadget covers (50 formulas), side structure, budget bound: ";
        note += a_ok ? "covers ok" : "covers FAILED";
        note += b_ok ? ", direct bound ok" : (unsat.skips() > 0 ? ", direct bound timed out"
                                                                : ", direct bound FAILED");
        note += bprime_ok && bprime_seen ? ", cluster route ok" : ", cluster route FAILED";
        lines.push_back({6, pass, note, seconds_since(t0)});
    }

    run_criterion(7, "feedback-below-cover host suite, 100 instances", [] {
        return std::vector<SuiteReport>{ag::suite_thm9(kSeed, 100)};
    });

    run_criterion(8, "parameter hierarchy, 500 graphs", [] {
        return std::vector<SuiteReport>{ag::suite_hierarchy(kSeed, 500)};
    });

    std::sort(lines.begin(), lines.end(),
              [](const CriterionLine& a, const CriterionLine& b) { return a.criterion < b.criterion; });
    bool all = true;
    for (const auto& line : lines) {
        all = all && line.pass;
        std::printf("criterion %d: %s  (%s)  [%.1fs]\n", line.criterion,
                    line.pass ? "PASS" : "FAIL", line.note.c_str(), line.seconds);
    }
    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
