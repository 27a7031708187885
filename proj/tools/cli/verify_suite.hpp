#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace vwbm::cli {

/// Check groups selectable with --level.
inline const std::vector<std::string>& verify_groups() {
    static const std::vector<std::string> groups = {"rowspan", "klein", "genus",       "spectrum", "trace",
                                                    "covers",  "primitivity", "lifts", "generators"};
    return groups;
}

struct VerifyOptions {
    std::int64_t nmax = 12;
    std::set<std::string> groups;  // empty means all
    bool inject_sigma4_fault = false;
    unsigned workers = 1;
};

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

/// Runs the selected checks over every valid (n, m) with 2 <= n, m <= nmax.
/// Results come back in a fixed order independent of scheduling.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

/// Lift-class counting is exhaustive over pairs of lifts; it runs only for
/// n, m up to this bound.
inline constexpr std::int64_t kLiftClassBound = 12;

}  // namespace vwbm::cli
