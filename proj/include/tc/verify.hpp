#pragma once

#include <string>
#include <vector>

namespace tc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Acceptance-grade checks, each deterministic and self-contained.
CheckResult check_jc_exactness();             // single-atom doublets are exact
CheckResult check_small_zone_exactness();     // d <= 3 zones are exact
CheckResult check_spot_values();              // frozen quartic-oracle values
CheckResult check_deviation_trend_r6();       // error peaks at M = 2r and decays
CheckResult check_branch_crossover_r3();      // nearby/remote branch validity
CheckResult check_algebra_identities();       // PAE + commutator identity sweep
CheckResult check_residual_scaling();         // off-diagonal residual ~ alpha^3
CheckResult check_full_space_consistency();   // extracted blocks vs closed form
CheckResult check_thermal_limits();           // limits and collective enhancement
CheckResult check_superzone_oracle();         // factorized trace vs zone sum

// Named suites for the command-line verifier; "all" runs everything.
std::vector<CheckResult> verify_suite(const std::string& suite);
std::vector<std::string> verify_suite_names();

}  // namespace tc
