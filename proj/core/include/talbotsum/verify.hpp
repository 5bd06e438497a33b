#ifndef TALBOTSUM_VERIFY_HPP
#define TALBOTSUM_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace talbotsum::verify {

struct CheckResult {
    bool pass = false;
    std::string detail;
};

struct Check {
    std::string name;
    std::string suite;       // gauss | superosc | talbot | schrodinger
    int acceptance = 0;      // 1..13 for acceptance criteria, 0 otherwise
    std::function<CheckResult()> run;
};

// The registered checks: the acceptance criteria plus the per-module
// invariant sweeps that the CLI `verify` command executes.
const std::vector<Check>& all_checks();

// Subset by suite name ("all" or empty selects everything).
std::vector<const Check*> suite_checks(const std::string& suite);

} // namespace talbotsum::verify

#endif
