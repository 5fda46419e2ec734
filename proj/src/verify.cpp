#include "tc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "tc/eigen.hpp"
#include "tc/pae.hpp"
#include "tc/perturbation.hpp"
#include "tc/tc_model.hpp"
#include "tc/thermal.hpp"

namespace tc {

namespace {

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

// Eigenvalues of a 4x4 zero-diagonal tridiagonal from its characteristic
// polynomial  l^4 - (t1^2+t2^2+t3^2) l^2 + t1^2 t3^2.
void quartic_levels(double t1, double t2, double t3, double out[4]) {
    const double s = t1 * t1 + t2 * t2 + t3 * t3;
    const double prod = t1 * t1 * t3 * t3;
    const double disc = std::sqrt(s * s - 4.0 * prod);
    const double hi = std::sqrt((s + disc) / 2.0);
    const double lo = std::sqrt((s - disc) / 2.0);
    out[0] = -hi;
    out[1] = -lo;
    out[2] = lo;
    out[3] = hi;
}

}  // namespace

CheckResult check_jc_exactness() {
    double worst = 0.0;
    int worst_m = 0;
    for (int M = 1; M <= 200; ++M) {
        const SpectrumResult res = compare_spectra(M, half(1));
        const double root = std::sqrt(double(M));
        double dev = res.max_abs_dev;
        dev = std::max(dev, std::abs(res.exact.front() + root));
        dev = std::max(dev, std::abs(res.exact.back() - root));
        if (dev > worst) {
            worst = dev;
            worst_m = M;
        }
    }
    return {"jc_exactness",
            worst <= 1e-12,
            fmt("max |dev| vs +-sqrt(M) over M in [1,200]: %.3g (at M=%.0f), tol 1e-12", worst,
                double(worst_m))};
}

CheckResult check_small_zone_exactness() {
    double worst = 0.0;
    for (int M = 0; M <= 60; ++M)
        for (int r2 = 0; r2 <= 20; ++r2) {
            const HalfInt r = HalfInt::from_twice(r2);
            if (classify_zone(M, r).dim > 3) continue;
            const SpectrumResult res = compare_spectra(M, r);
            const double w = rabi_frequency(M, r);
            worst = std::max(worst, res.max_abs_dev / w);
        }
    return {"small_zone_exactness", worst <= 1e-9,
            fmt("max dev/Omega_R over d<=3 zones (M<=60, 2r<=20): %.3g, tol 1e-9", worst)};
}

CheckResult check_spot_values() {
    bool ok = true;
    std::string detail;

    // (M=5, r=3/2): off-diagonals {sqrt(15), 4, 3}; characteristic polynomial
    // l^4 - 40 l^2 + 135.
    {
        double oracle[4];
        quartic_levels(std::sqrt(15.0), 4.0, 3.0, oracle);
        const SpectrumResult res = compare_spectra(5, half(3));
        double ex_dev = 0.0;
        for (int i = 0; i < 4; ++i) ex_dev = std::max(ex_dev, std::abs(res.exact[i] - oracle[i]));
        ok = ok && ex_dev <= 1e-10;
        // Closed third-order values 6 (1 + 1/256) and 2 (1 - 9/256).
        const double e_top = res.perturbative[3].energy;
        const double e_mid = res.perturbative[2].energy;
        ok = ok && std::abs(e_top - 6.0 * (1.0 + 1.0 / 256.0)) <= 1e-12;
        ok = ok && std::abs(e_mid - 2.0 * (1.0 - 9.0 / 256.0)) <= 1e-12;
        ok = ok && res.max_abs_dev <= 7e-4;
        detail += fmt("(5,3/2): oracle dev %.2g, |pert-exact| %.3g (tol 7e-4); ", ex_dev,
                      res.max_abs_dev);
    }
    // (M=3, r=3): off-diagonals {sqrt18, sqrt20, sqrt12}; l^4 - 50 l^2 + 216.
    {
        double oracle[4];
        quartic_levels(std::sqrt(18.0), std::sqrt(20.0), std::sqrt(12.0), oracle);
        const SpectrumResult res = compare_spectra(3, half(6));
        double ex_dev = 0.0;
        for (int i = 0; i < 4; ++i) ex_dev = std::max(ex_dev, std::abs(res.exact[i] - oracle[i]));
        ok = ok && ex_dev <= 1e-10;
        const double e_top = res.perturbative[3].energy;
        const double e_mid = res.perturbative[2].energy;
        const double s5 = std::sqrt(5.0);
        ok = ok && std::abs(e_top - 3.0 * s5 * 1.0025) <= 1e-12;
        ok = ok && std::abs(e_mid - s5 * 0.9775) <= 1e-12;
        ok = ok && res.max_abs_dev <= 4e-4;
        detail += fmt("(3,3): oracle dev %.2g, |pert-exact| %.3g (tol 4e-4)", ex_dev,
                      res.max_abs_dev);
    }
    return {"derived_spot_values", ok, detail};
}

CheckResult check_deviation_trend_r6() {
    const HalfInt r = half(12);
    std::vector<double> dev(61, 0.0);
    for (int M = 12; M <= 60; ++M) dev[M] = compare_spectra(M, r).max_abs_dev;
    const double ratio = dev[12] / dev[40];
    bool monotone = true;
    int break_m = -1;
    for (int M = 16; M < 60; ++M)
        if (dev[M + 1] > dev[M] + 1e-12) {
            monotone = false;
            break_m = M + 1;
            break;
        }
    const bool ok = (ratio >= 10.0) && monotone;
    std::string detail = fmt("dev(M=12)/dev(M=40) = %.3g (need >= 10); nonincreasing for M in [16,60]: ", ratio);
    detail += monotone ? "yes" : fmt("no (first rise at M=%.0f)", double(break_m));
    return {"deviation_trend_r6", ok, detail};
}

CheckResult check_branch_crossover_r3() {
    const auto rows = branch_deviation_sweep_serial(half(6), 0, 40);
    auto val = [](double x) { return std::isfinite(x) ? x : std::numeric_limits<double>::infinity(); };
    bool low_ok = true, high_ok = true;
    for (const auto& row : rows) {
        if (row.M <= 4 && !(val(row.dev_nearby) < val(row.dev_remote))) low_ok = false;
        if (row.M >= 8 && !(val(row.dev_remote) < val(row.dev_nearby))) high_ok = false;
    }
    return {"branch_crossover_r3", low_ok && high_ok,
            std::string("nearby better for M <= 4: ") + (low_ok ? "yes" : "no") +
                "; remote better for M >= 8: " + (high_ok ? "yes" : "no")};
}

namespace {

struct PaeDefects {
    double comm = 0.0;    // ||[a0,a+] - a+|| / ||a+||
    double struct_ = 0.0; // ||a+a- - p(a0)|| / ||p(a0)||
    double herm = 0.0;    // ||a- - a+^dag||
};

PaeDefects pae_defects(const PaeGenerators& g) {
    PaeDefects d;
    const Mat c = commutator(g.a0, g.a_plus) - g.a_plus;
    const double np = frob_norm(g.a_plus);
    d.comm = np > 0.0 ? frob_norm(c) / np : frob_norm(c);
    std::vector<double> pd(g.dim);
    for (int i = 0; i < g.dim; ++i) pd[i] = g.poly.eval(g.a0(i, i).real());
    const Mat p = Mat::diag(pd);
    const double npoly = frob_norm(p);
    const Mat sdef = g.a_plus * g.a_minus - p;
    d.struct_ = npoly > 0.0 ? frob_norm(sdef) / npoly : frob_norm(sdef);
    d.herm = frob_norm(g.a_minus - g.a_plus.adjoint());
    return d;
}

int left_bounding_pivot(const StructurePolynomial& p, int d) {
    const double left = p.roots.back() - d;
    for (int i = 0; i < p.order(); ++i)
        if (std::abs(p.roots[i] - left) <= kRootTol) return i;
    return -1;
}

}  // namespace

CheckResult check_algebra_identities() {
    double worst_comm = 0.0, worst_struct = 0.0, worst_herm = 0.0;
    double worst_round = 0.0, worst_ident = 0.0;

    for (int M = 0; M <= 30; ++M)
        for (int r2 = 0; r2 <= 8; ++r2) {
            const HalfInt r = HalfInt::from_twice(r2);
            const ZoneLabel z = classify_zone(M, r);
            const StructurePolynomial p = tc_structure_polynomial(M, r);

            const PaeGenerators left = realize_pae_left(p, p.order() - 1, z.dim);
            PaeDefects d = pae_defects(left);
            worst_comm = std::max(worst_comm, d.comm);
            worst_struct = std::max(worst_struct, d.struct_);
            worst_herm = std::max(worst_herm, d.herm);

            const int lp = left_bounding_pivot(p, z.dim);
            if (lp >= 0) {
                d = pae_defects(realize_pae_right(p, lp, z.dim));
                worst_comm = std::max(worst_comm, d.comm);
                worst_struct = std::max(worst_struct, d.struct_);
                worst_herm = std::max(worst_herm, d.herm);
            }

            // Round trip through the spin algebra and back (nearby/remote
            // only; the intermediate irrep class R(2,1,d) has no spin image).
            if (z.kind != ZoneKind::Intermediate && z.dim >= 1) {
                const HalfInt rt = effective_spin(M, r);
                const StructurePolynomial sp = StructurePolynomial::su2(rt);
                const PaeGenerators to_spin = isomorphism_map(left, sp, 0, MapOrientation::Reversed);
                const PaeGenerators back = isomorphism_map(to_spin, p, p.order() - 1, MapOrientation::Reversed);
                worst_round = std::max(worst_round, max_abs(back.a0 - left.a0));
                worst_round = std::max(worst_round, max_abs(back.a_plus - left.a_plus));
                worst_round = std::max(worst_round, max_abs(back.a_minus - left.a_minus));
                worst_herm = std::max(worst_herm, pae_defects(to_spin).herm);
            }
        }

    for (int r2 = 1; r2 <= 8; ++r2) {
        const StructurePolynomial sp = StructurePolynomial::su2(HalfInt::from_twice(r2));
        for (const auto& g : {realize_pae_right(sp, 0, r2 + 1), realize_pae_left(sp, 1, r2 + 1)}) {
            const PaeDefects d = pae_defects(g);
            worst_comm = std::max(worst_comm, d.comm);
            worst_struct = std::max(worst_struct, d.struct_);
            worst_herm = std::max(worst_herm, d.herm);
        }
    }

    for (int r2 = 1; r2 <= 7; ++r2)
        worst_ident = std::max(worst_ident, commutator_identities_check(HalfInt::from_twice(r2)).worst());

    const bool ok = worst_comm <= 1e-10 && worst_struct <= 1e-10 && worst_herm <= 1e-12 &&
                    worst_round <= 1e-10 && worst_ident <= 1e-10;
    return {"algebra_identities", ok,
            fmt("commutation %.2g, structure %.2g, hermiticity %.2g, ", worst_comm, worst_struct,
                worst_herm) +
                fmt("round trip %.2g, commutator identities %.2g (tol 1e-10)", worst_round,
                    worst_ident)};
}

CheckResult check_residual_scaling() {
    const double alphas[4] = {0.2, 0.1, 0.05, 0.025};
    double lx[4], ly[4];
    for (int i = 0; i < 4; ++i) {
        const TransformChain c = transform_chain(half(4), alphas[i]);
        lx[i] = std::log(alphas[i]);
        ly[i] = std::log(c.offdiag_residual);
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < 4; ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double slope = (4.0 * sxy - sx * sy) / (4.0 * sxx - sx * sx);
    return {"residual_order_scaling", slope >= 2.9,
            fmt("log-log slope of off-diagonal residual vs alpha at r~=2: %.4g (need >= 2.9)", slope)};
}

CheckResult check_full_space_consistency() {
    bool ok = true;
    std::string detail;
    for (int n_atoms : {2, 3}) {
        const FullSpaceOps ops = build_full_ops(n_atoms, 20, 1.0);
        const auto zones = block_decompose(ops);
        double worst = 0.0, worst_leak = 0.0;
        int trusted = 0;
        for (const auto& ez : zones) {
            if (!ez.trusted) continue;
            ++trusted;
            if (ez.multiplicity != static_cast<int>(multiplicity_g(n_atoms, ez.label.r))) ok = false;
            const auto got = tridiag_eigenvalues(ez.block);
            const auto want = tridiag_eigenvalues(zone_matrix(ez.label.M, ez.label.r).t);
            for (size_t i = 0; i < got.size(); ++i)
                worst = std::max(worst, std::abs(got[i] - want[i]));
            worst_leak = std::max(worst_leak, ez.off_tridiag);
        }
        ok = ok && worst <= 1e-10 && worst_leak <= 1e-10 && trusted > 0;

        // Remote superzones carry the whole 2^N atomic space.
        for (int K = n_atoms + 1; K <= ops.n_max; ++K) {
            if (static_cast<int>(superzone_indices(ops, K).size()) != (1 << n_atoms)) ok = false;
        }
        unsigned __int128 total = 0;
        for (int r2 = n_atoms % 2; r2 <= n_atoms; r2 += 2)
            total += multiplicity_g_exact(n_atoms, HalfInt::from_twice(r2)) *
                     static_cast<unsigned>(r2 + 1);
        if (total != (static_cast<unsigned __int128>(1) << n_atoms)) ok = false;

        detail += fmt("N=%.0f: %.0f trusted zones, worst spectrum dev %.2g; ", double(n_atoms),
                      double(trusted), worst);
    }
    return {"full_space_consistency", ok, detail + "(tol 1e-10)"};
}

CheckResult check_thermal_limits() {
    bool ok = true;
    std::string detail;

    double worst_high = 0.0, worst_low = 0.0;
    for (int n = 1; n <= 10; ++n) {
        ThermalParams hot{n, 10.0, 1e4, -1, 1.0};
        worst_high = std::max(worst_high, std::abs(emission_intensity(hot) / n - 0.5));
        ThermalParams cold{n, 10.0, 0.01, -1, 1.0};
        worst_low = std::max(worst_low, emission_intensity(cold) / n);
    }
    ok = ok && worst_high <= 0.01 && worst_low <= 1e-6;
    detail += fmt("high-T |i-1/2| max %.2g (tol 0.01); low-T max %.2g (tol 1e-6); ", worst_high,
                  worst_low);

    const auto grid = log_grid(0.1, 100.0, 61);
    double peak[3] = {0, 0, 0};
    const int sizes[3] = {10, 50, 100};
    for (int k = 0; k < 3; ++k) {
        const auto rows = temperature_scan(sizes[k], 10.0, grid);
        for (const auto& row : rows) peak[k] = std::max(peak[k], row.i_per_atom);
    }
    ok = ok && peak[2] > 0.5 && peak[0] < peak[1] && peak[1] < peak[2];
    detail += fmt("peaks N=10/50/100: %.4g / %.4g / %.4g (need rising, N=100 > 0.5)", peak[0],
                  peak[1], peak[2]);
    return {"thermal_limits_enhancement", ok, detail};
}

CheckResult check_superzone_oracle() {
    ThermalParams p{2, 1.0, 1.0, -1, 1.0};
    bool ok = true;
    std::string detail;
    for (int K : {3, 4, 5}) {
        const double a = superzone_dipole(p, K);
        const double b = superzone_zone_sum(p, K);
        const double rel = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
        ok = ok && rel <= 1e-10;
        detail += fmt("K=%.0f: factorized %.12g vs zone sum %.12g; ", double(K), a, b);
    }
    return {"superzone_oracle", ok, detail + "(rel tol 1e-10)"};
}

std::vector<std::string> verify_suite_names() {
    return {"all", "algebra", "perturbation", "zones", "thermal"};
}

std::vector<CheckResult> verify_suite(const std::string& suite) {
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    if (all || suite == "perturbation") {
        out.push_back(check_jc_exactness());
        out.push_back(check_small_zone_exactness());
        out.push_back(check_spot_values());
        out.push_back(check_deviation_trend_r6());
        out.push_back(check_branch_crossover_r3());
        out.push_back(check_residual_scaling());
    }
    if (all || suite == "algebra") out.push_back(check_algebra_identities());
    if (all || suite == "zones") out.push_back(check_full_space_consistency());
    if (all || suite == "thermal") {
        out.push_back(check_thermal_limits());
        out.push_back(check_superzone_oracle());
    }
    if (out.empty()) throw std::invalid_argument("verify_suite: unknown suite '" + suite + "'");
    return out;
}

}  // namespace tc
