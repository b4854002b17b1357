// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Criteria 1-8 map onto the library verification suites (same tolerances);
// criterion 9 requires the whole battery to finish within its time budget,
// with the obstruction-certificate suite alone capped separately.

#include <chrono>
#include <cstdio>
#include <vector>

#include "starricci/starricci.hpp"

int main() {
    using namespace starricci;
    using clock = std::chrono::steady_clock;

    struct Line {
        bool passed;
        std::string text;
    };
    std::vector<Line> lines;

    const auto t0 = clock::now();

    const std::vector<SuiteResult> suites = run_all_suites();
    for (std::size_t i = 0; i < suites.size(); ++i)
        lines.push_back({suites[i].passed,
                         "criterion " + std::to_string(i + 1) + ": " + suites[i].name +
                             " (max residual " + fmt_num(suites[i].max_residual) + ")"});

    const auto t_obstruction_start = clock::now();
    const SuiteResult obstruction = suite_nonhopf_obstructions();
    const double obstruction_seconds =
        std::chrono::duration<double>(clock::now() - t_obstruction_start).count();

    const double total_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    const bool timing_ok =
        total_seconds < 30.0 && obstruction_seconds < 5.0 && obstruction.passed;
    lines.push_back({timing_ok, "criterion 9: full battery in " + fmt_num(total_seconds) +
                                    " s (obstruction certificates " +
                                    fmt_num(obstruction_seconds) + " s)"});

    bool all_passed = true;
    for (const Line& line : lines) {
        all_passed = all_passed && line.passed;
        std::printf("%s  %s\n", line.passed ? "PASS" : "FAIL", line.text.c_str());
    }
    return all_passed ? 0 : 1;
}
