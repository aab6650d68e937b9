#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fgbm {

// One numerical check inside a verification suite. `measured` against
// `bound` is the generic comparison; checks that compare two quantities for
// agreement report the discrepancy as `measured`.
struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0.0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Names accepted by run_verify_suite, in display order.
const std::vector<std::string>& verify_suite_names();

// Runs one suite of self checks. Unknown names throw std::invalid_argument.
// All randomized checks derive from `seed`, so reports are reproducible.
SuiteReport run_verify_suite(const std::string& name, std::uint64_t seed,
                             std::size_t threads = 0);

}  // namespace fgbm
