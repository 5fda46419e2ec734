// Command-line front end: emits zone tables, zone spectra, branch-error
// sweeps and thermal emission scans as CSV/JSON, plus a verification mode
// that runs the invariant suites.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "tc/eigen.hpp"
#include "tc/io.hpp"
#include "tc/pae.hpp"
#include "tc/perturbation.hpp"
#include "tc/tc_model.hpp"
#include "tc/thermal.hpp"
#include "tc/verify.hpp"

namespace {

constexpr const char* kToolVersion = "tcpae 0.1.0";

struct RunConfig {
    int M = 0;
    int r2 = 1;  // twice the Dicke index
    int atoms = 1;
    double omega = 10.0;
    double kt_min = 0.1;
    double kt_max = 100.0;
    int grid = 100;
    bool log_grid_flag = false;
    int k_min = 0;
    int k_max = -1;  // default derived from atoms
    int m_min = 0;
    int m_max = 40;
    std::string out;
    std::string format = "csv";
    std::string suite = "all";
};

std::string int128_str(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + int(v % 10)));
        v /= 10;
    }
    return s;
}

std::string half_str(tc::HalfInt h) {
    if (h.is_integer()) return std::to_string(h.twice / 2);
    return tc::format_g17(h.value());
}

int cmd_zones(const RunConfig& cfg) {
    if (cfg.atoms < 1 || cfg.atoms > 100)
        throw std::invalid_argument("zones: --atoms must be in [1, 100]");
    const int k_max = cfg.k_max >= 0 ? cfg.k_max : cfg.atoms + 6;
    if (cfg.k_min < 0 || k_max < cfg.k_min) throw std::invalid_argument("zones: bad K range");

    tc::Table t;
    t.columns = {"K", "M", "r", "kind", "d", "G"};
    t.numeric = {true, true, true, false, true, true};
    t.meta = {{"tool", kToolVersion},
              {"command", "zones"},
              {"atoms", std::to_string(cfg.atoms)},
              {"k_min", std::to_string(cfg.k_min)},
              {"k_max", std::to_string(k_max)}};
    for (int K = cfg.k_min; K <= k_max; ++K) {
        for (int r2 = cfg.atoms; r2 >= cfg.atoms % 2; r2 -= 2) {
            const tc::HalfInt r = tc::HalfInt::from_twice(r2);
            const int M = K + (r2 - cfg.atoms) / 2;  // K - N/2 + r, exact in halves
            if (M < 0) continue;
            const tc::ZoneLabel z = tc::classify_zone(M, r);
            t.rows.push_back({std::to_string(K), std::to_string(M), half_str(r),
                              tc::zone_kind_name(z.kind), std::to_string(z.dim),
                              int128_str(tc::multiplicity_g_exact(cfg.atoms, r))});
        }
    }
    tc::write_table(t, cfg.out, cfg.format);
    return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
    if (cfg.M < 0 || cfg.r2 < 0) throw std::invalid_argument("spectrum: need M >= 0 and r2 >= 0");
    const tc::HalfInt r = tc::HalfInt::from_twice(cfg.r2);
    const tc::SpectrumResult res = tc::compare_spectra(cfg.M, r);
    if (res.label.kind == tc::ZoneKind::Intermediate)
        std::cerr << "note: M = 2r boundary zone; nearby and remote expansions coincide there\n";
    if (!res.converges)
        std::cerr << "warning: alpha (r~ - 1/2) >= 1, expansion outside its convergence window\n";

    tc::Table t;
    t.columns = {"m_tilde", "exact", "perturbative", "abs_dev"};
    t.numeric = {true, true, true, true};
    t.meta = {{"tool", kToolVersion},
              {"command", "spectrum"},
              {"M", std::to_string(cfg.M)},
              {"r2", std::to_string(cfg.r2)},
              {"kind", tc::zone_kind_name(res.label.kind)},
              {"omega_R", tc::format_g17(tc::rabi_frequency(cfg.M, r))}};
    for (size_t i = 0; i < res.exact.size(); ++i) {
        const auto& lv = res.perturbative[i];
        t.rows.push_back({tc::format_g17(lv.m.value()), tc::format_g17(res.exact[i]),
                          tc::format_g17(lv.energy), tc::format_g17(std::abs(lv.energy - res.exact[i]))});
    }
    tc::write_table(t, cfg.out, cfg.format);
    return 0;
}

int cmd_compare(const RunConfig& cfg) {
    if (cfg.r2 < 0) throw std::invalid_argument("compare: need r2 >= 0");
    if (cfg.m_min < 0 || cfg.m_max < cfg.m_min) throw std::invalid_argument("compare: bad M range");
    const auto rows = tc::branch_deviation_sweep(tc::HalfInt::from_twice(cfg.r2), cfg.m_min, cfg.m_max);

    tc::Table t;
    t.columns = {"M", "max_abs_dev_nearby", "max_abs_dev_remote"};
    t.numeric = {true, true, true};
    t.meta = {{"tool", kToolVersion},
              {"command", "compare"},
              {"r2", std::to_string(cfg.r2)},
              {"m_min", std::to_string(cfg.m_min)},
              {"m_max", std::to_string(cfg.m_max)}};
    for (const auto& row : rows)
        t.rows.push_back({std::to_string(row.M), tc::format_g17(row.dev_nearby),
                          tc::format_g17(row.dev_remote)});
    tc::write_table(t, cfg.out, cfg.format);
    return 0;
}

int cmd_intensity(const RunConfig& cfg) {
    if (cfg.atoms < 1 || cfg.atoms > 100)
        throw std::invalid_argument("intensity: --atoms must be in [1, 100]");
    if (cfg.kt_min <= 0.0 || cfg.kt_max < cfg.kt_min)
        throw std::invalid_argument("intensity: need 0 < kt-min <= kt-max");
    if (cfg.omega <= 0.0) throw std::invalid_argument("intensity: need omega > 0");
    if (cfg.grid < 1 || cfg.grid > 10000)
        throw std::invalid_argument("intensity: --grid must be in [1, 10000]");

    const auto grid = cfg.log_grid_flag ? tc::log_grid(cfg.kt_min, cfg.kt_max, cfg.grid)
                                        : tc::linear_grid(cfg.kt_min, cfg.kt_max, cfg.grid);
    const auto rows = tc::temperature_scan(cfg.atoms, cfg.omega, grid);

    tc::Table t;
    t.columns = {"kT", "i_per_atom", "i_classical", "correlation"};
    t.numeric = {true, true, true, true};
    t.meta = {{"tool", kToolVersion},
              {"command", "intensity"},
              {"atoms", std::to_string(cfg.atoms)},
              {"omega", tc::format_g17(cfg.omega)},
              {"kt_min", tc::format_g17(cfg.kt_min)},
              {"kt_max", tc::format_g17(cfg.kt_max)},
              {"grid", std::to_string(cfg.grid)},
              {"scale", cfg.log_grid_flag ? "log" : "linear"}};
    for (const auto& row : rows)
        t.rows.push_back({tc::format_g17(row.kT), tc::format_g17(row.i_per_atom),
                          tc::format_g17(row.i_classical), tc::format_g17(row.correlation)});
    tc::write_table(t, cfg.out, cfg.format);
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    const auto results = tc::verify_suite(cfg.suite);
    tc::Table t;
    t.columns = {"check", "status", "detail"};
    t.numeric = {false, false, false};
    t.meta = {{"tool", kToolVersion}, {"command", "verify"}, {"suite", cfg.suite}};
    bool all_pass = true;
    for (const auto& res : results) {
        all_pass = all_pass && res.pass;
        t.rows.push_back({res.name, res.pass ? "PASS" : "FAIL", res.detail});
    }
    tc::write_table(t, cfg.out, cfg.format);
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tavis-Cummings zone spectra, perturbative levels and thermal emission"};
    app.set_config("--config", "", "config file with key=value lines (flags take precedence)");

    RunConfig cfg;
    std::string command;
    app.add_option("command", command, "one of: zones, spectrum, compare, intensity, verify")
        ->required();
    app.add_option("--M", cfg.M, "total excitation number of the zone");
    app.add_option("--r2", cfg.r2, "twice the Dicke index r");
    app.add_option("--atoms", cfg.atoms, "number of atoms N");
    app.add_option("--omega", cfg.omega, "field frequency over the coupling");
    app.add_option("--kt-min", cfg.kt_min, "lowest temperature of the scan");
    app.add_option("--kt-max", cfg.kt_max, "highest temperature of the scan");
    app.add_option("--grid", cfg.grid, "number of scan points");
    app.add_flag("--log-grid", cfg.log_grid_flag, "logarithmic temperature spacing");
    app.add_option("--k-min", cfg.k_min, "lowest quanta eigenvalue K listed");
    app.add_option("--k-max", cfg.k_max, "highest quanta eigenvalue K listed");
    app.add_option("--m-min", cfg.m_min, "lowest M of the compare sweep");
    app.add_option("--m-max", cfg.m_max, "highest M of the compare sweep");
    app.add_option("--out", cfg.out, "output path (stdout when omitted)");
    app.add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--suite", cfg.suite, "verify suite: all, algebra, perturbation, zones, thermal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (command == "zones") return cmd_zones(cfg);
        if (command == "spectrum") return cmd_spectrum(cfg);
        if (command == "compare") return cmd_compare(cfg);
        if (command == "intensity") return cmd_intensity(cfg);
        if (command == "verify") return cmd_verify(cfg);
        std::cerr << "unknown command '" << command << "'\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
