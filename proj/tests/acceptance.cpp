// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria 1-10 come from the library verifier; criterion 11 exercises the
// command-line tool end to end.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tc/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

tc::CheckResult check_cli_determinism() {
    const std::string cli = TC_CLI_BIN;
    const std::vector<std::string> cases = {
        "zones --atoms 4 --k-min 0 --k-max 10",
        "spectrum --M 2525 --r2 50",
        "compare --r2 6 --m-min 0 --m-max 40",
        "intensity --atoms 50 --omega 10 --kt-min 0.1 --kt-max 100 --grid 40 --log-grid",
        "spectrum --M 12 --r2 4 --format json",
    };
    for (const auto& args : cases) {
        const std::string a = "acc_run_a.out", b = "acc_run_b.out";
        if (std::system((cli + " " + args + " --out " + a + " 2>/dev/null").c_str()) != 0)
            return {"cli_determinism", false, "command failed: " + args};
        if (std::system((cli + " " + args + " --out " + b + " 2>/dev/null").c_str()) != 0)
            return {"cli_determinism", false, "command failed: " + args};
        const std::string sa = slurp(a), sb = slurp(b);
        std::remove(a.c_str());
        std::remove(b.c_str());
        if (sa.empty() || sa != sb)
            return {"cli_determinism", false, "outputs differ for: " + args};
    }
    return {"cli_determinism", true, "byte-identical reruns over zones/spectrum/compare/intensity"};
}

}  // namespace

int main() {
    std::vector<tc::CheckResult> results;
    results.push_back(tc::check_jc_exactness());
    results.push_back(tc::check_small_zone_exactness());
    results.push_back(tc::check_spot_values());
    results.push_back(tc::check_deviation_trend_r6());
    results.push_back(tc::check_branch_crossover_r3());
    results.push_back(tc::check_algebra_identities());
    results.push_back(tc::check_residual_scaling());
    results.push_back(tc::check_full_space_consistency());
    results.push_back(tc::check_thermal_limits());
    results.push_back(tc::check_superzone_oracle());
    results.push_back(check_cli_determinism());

    bool all = true;
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& res = results[i];
        all = all && res.pass;
        std::printf("[%s] %2zu. %-28s %s\n", res.pass ? "PASS" : "FAIL", i + 1, res.name.c_str(),
                    res.detail.c_str());
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
