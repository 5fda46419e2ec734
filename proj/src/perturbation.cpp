#include "tc/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tc/expm.hpp"
#include "tc/tc_model.hpp"

namespace tc {

namespace {

void check_zone_args(int M, HalfInt r) {
    if (M < 0 || r.twice < 0) throw std::invalid_argument("zone parameters must be nonnegative");
}

double nan_d() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

HalfInt effective_spin(int M, HalfInt r) {
    check_zone_args(M, r);
    return HalfInt::from_twice(std::min(M, r.twice));
}

double rabi_remote(int M, HalfInt r) {
    const double arg = M - r.value() + 0.5;
    return arg > 0.0 ? 2.0 * std::sqrt(arg) : nan_d();
}

double rabi_nearby(int M, HalfInt r) {
    const double arg = (4.0 * r.value() - M + 1.0) / 2.0;
    return arg > 0.0 ? 2.0 * std::sqrt(arg) : nan_d();
}

double rabi_frequency(int M, HalfInt r) {
    check_zone_args(M, r);
    return (M >= r.twice) ? rabi_remote(M, r) : rabi_nearby(M, r);
}

double alpha_param(int M, HalfInt r) {
    const double w = rabi_frequency(M, r);
    return 4.0 / (w * w);
}

bool expansion_converges(int M, HalfInt r) {
    const HalfInt rt = effective_spin(M, r);
    return alpha_param(M, r) * (rt.value() - 0.5) < 1.0;
}

std::vector<LevelValue> third_order_levels(HalfInt r_tilde, double omega_r) {
    const double alpha = 4.0 / (omega_r * omega_r);
    const double a16 = (alpha / 4.0) * (alpha / 4.0);
    const double rr1 = r_tilde.value() * (r_tilde.value() + 1.0);
    std::vector<LevelValue> lv;
    for (int m2 = -r_tilde.twice; m2 <= r_tilde.twice; m2 += 2) {
        const double m = 0.5 * m2;
        lv.push_back({HalfInt::from_twice(m2), omega_r * m * (1.0 + a16 * (5.0 * m * m - 3.0 * rr1 + 1.0))});
    }
    return lv;
}

std::vector<LevelValue> third_order_spectrum(int M, HalfInt r) {
    check_zone_args(M, r);
    return third_order_levels(effective_spin(M, r), rabi_frequency(M, r));
}

SeriesTerms series_terms(HalfInt r_tilde, double alpha) {
    const SpinOps s = spin_ops(r_tilde);
    const Mat sx = 0.5 * (s.sp + s.sm);
    const Mat b = anticommutator(s.s3, sx);
    const double a16 = (alpha / 4.0) * (alpha / 4.0);

    SeriesTerms t;
    t.v0 = (2.0 * (1.0 - 0.5 * a16)) * sx;
    t.v1 = (-(alpha / 2.0) * (1.0 + 0.5 * a16)) * b;
    t.v2 = (-(alpha / 2.0) * (alpha / 2.0)) * (s.s3 * sx * s.s3);
    t.v3 = (-0.5 * std::pow(alpha / 2.0, 3.0)) * (s.s3 * b * s.s3);
    return t;
}

TransformChain transform_chain(HalfInt r_tilde, double alpha) {
    if (r_tilde.twice < 1) throw std::invalid_argument("transform_chain: need d >= 2");
    const SpinOps s = spin_ops(r_tilde);

    TransformChain c;
    c.u0 = expm_skew(cplx(M_PI / 4.0, 0.0) * (s.sp - s.sm));

    // First-order generator ({S3,S+} - {S3,S-})/2, the sign that satisfies
    // [S3, D1] = {S3, Sx}; with it U1 cancels the first-order term instead
    // of doubling it.
    const Mat d1 = 0.5 * (anticommutator(s.s3, s.sp) - anticommutator(s.s3, s.sm));
    const double x = 0.25 * (1.0 + 3.0 * (alpha / 8.0) * (alpha / 8.0));
    c.u1 = expm_skew(cplx(alpha * x, 0.0) * d1);

    // Second-order generator; the sign makes the quadrupole part of v2
    // cancel, leaving only the diagonal piece.
    const Mat ly = 0.25 * (s.sp * s.sp - s.sm * s.sm);
    const double a16 = (alpha / 4.0) * (alpha / 4.0);
    c.u2 = expm_skew(cplx(-0.5 * a16, 0.0) * (ly * s.s3 + s.s3 * ly));

    const Mat u = c.u2 * (c.u1 * c.u0);
    c.conjugated = u * series_terms(r_tilde, alpha).sum() * u.adjoint();
    c.offdiag_residual = offdiag_norm(c.conjugated);
    const double omega_half = 1.0 / std::sqrt(alpha);
    c.diagonal_energy.resize(c.conjugated.dim());
    for (int i = 0; i < c.conjugated.dim(); ++i)
        c.diagonal_energy[i] = omega_half * c.conjugated(i, i).real();
    return c;
}

double CommutatorReport::worst() const {
    return std::max(std::max(rel_err[0], rel_err[1]), std::max(rel_err[2], rel_err[3]));
}

CommutatorReport commutator_identities_check(HalfInt r_tilde) {
    const SpinOps s = spin_ops(r_tilde);
    const int d = s.dim;
    const Mat sx = 0.5 * (s.sp + s.sm);
    const Mat b = anticommutator(s.s3, sx);
    const Mat d1 = 0.5 * (anticommutator(s.s3, s.sp) - anticommutator(s.s3, s.sm));
    const Mat s2 = s.s3 * s.s3 + 0.5 * (s.sp * s.sm + s.sm * s.sp);
    const Mat id = Mat::identity(d);
    const Mat s3sq = s.s3 * s.s3;

    auto rel = [](const Mat& lhs, const Mat& rhs) {
        const double scale = std::max({frob_norm(lhs), frob_norm(rhs), 1.0});
        return frob_norm(lhs - rhs) / scale;
    };

    const Mat c1 = commutator(s.s3, d1);
    const Mat c2 = commutator(c1, d1);
    const Mat c3 = commutator(c2, d1);

    CommutatorReport rep;
    rep.rel_err[0] = rel(c1, b);
    rep.rel_err[1] = rel(c2, 4.0 * (s.s3 * (s2 - 2.0 * s3sq - 0.25 * id)));
    // Third identity with the nested [S3^3, D1] written out; the compact form
    // in print drops the S3 powers.
    rep.rel_err[2] = rel(c3, (4.0 * s2 - id) * b - 8.0 * (s3sq * b + s.s3 * b * s.s3 + b * s3sq));
    rep.rel_err[3] = rel(commutator(s.s3 * sx * s.s3, d1),
                         2.0 * (s3sq * (s2 - 2.0 * s3sq)) + (s.s3 * sx) * (s.s3 * sx) +
                             (sx * s.s3) * (sx * s.s3));
    return rep;
}

SpectrumResult compare_spectra(int M, HalfInt r) {
    check_zone_args(M, r);
    SpectrumResult res;
    const ZoneMatrix z = zone_matrix(M, r);
    res.label = z.label;
    res.exact = tridiag_eigenvalues(z.t);
    res.perturbative = third_order_spectrum(M, r);
    std::sort(res.perturbative.begin(), res.perturbative.end(),
              [](const LevelValue& a, const LevelValue& b) { return a.energy < b.energy; });
    res.converges = expansion_converges(M, r);

    for (size_t i = 0; i < res.exact.size(); ++i) {
        const double dev = std::abs(res.perturbative[i].energy - res.exact[i]);
        res.max_abs_dev = std::max(res.max_abs_dev, dev);
        if (std::abs(res.exact[i]) > 1e-12)
            res.max_rel_dev = std::max(res.max_rel_dev, dev / std::abs(res.exact[i]));
    }
    return res;
}

namespace {

BranchDeviationRow branch_row(HalfInt r, int M) {
    const ZoneMatrix z = zone_matrix(M, r);
    const std::vector<double> exact = tridiag_eigenvalues(z.t);
    const double top = exact.back();

    auto branch_dev = [&](double omega_r, HalfInt r_tilde) {
        if (!std::isfinite(omega_r) || omega_r <= 0.0) return nan_d();
        const auto lv = third_order_levels(r_tilde, omega_r);
        double mx = -std::numeric_limits<double>::infinity();
        for (const auto& l : lv) mx = std::max(mx, l.energy);
        return std::abs(mx - top);
    };

    BranchDeviationRow row;
    row.M = M;
    row.dev_nearby = branch_dev(rabi_nearby(M, r), HalfInt::from_twice(M));
    row.dev_remote = branch_dev(rabi_remote(M, r), r);
    return row;
}

}  // namespace

std::vector<BranchDeviationRow> branch_deviation_sweep_serial(HalfInt r, int m_min, int m_max) {
    if (m_min < 0 || m_max < m_min) throw std::invalid_argument("branch_deviation_sweep: bad M range");
    std::vector<BranchDeviationRow> rows(m_max - m_min + 1);
    for (int M = m_min; M <= m_max; ++M) rows[M - m_min] = branch_row(r, M);
    return rows;
}

std::vector<BranchDeviationRow> branch_deviation_sweep(HalfInt r, int m_min, int m_max) {
    if (m_min < 0 || m_max < m_min) throw std::invalid_argument("branch_deviation_sweep: bad M range");
    std::vector<BranchDeviationRow> rows(m_max - m_min + 1);
#pragma omp parallel for schedule(dynamic)
    for (int M = m_min; M <= m_max; ++M) rows[M - m_min] = branch_row(r, M);
    return rows;
}

}  // namespace tc
