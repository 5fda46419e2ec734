#include "tc/thermal.hpp"

#include <cmath>
#include <stdexcept>

#include "tc/expm.hpp"
#include "tc/pae.hpp"
#include "tc/perturbation.hpp"
#include "tc/tc_model.hpp"

namespace tc {

HalfInt epsilon_of(int n_atoms) {
    if (n_atoms < 1) throw std::invalid_argument("epsilon_of: n_atoms must be >= 1");
    return HalfInt::from_twice(n_atoms % 2);
}

unsigned __int128 multiplicity_g_exact(int n_atoms, HalfInt r) {
    if (n_atoms < 1 || n_atoms > 100) throw std::invalid_argument("multiplicity_g: 1 <= N <= 100");
    if (r.twice < (n_atoms % 2) || r.twice > n_atoms || (n_atoms - r.twice) % 2 != 0)
        throw std::invalid_argument("multiplicity_g: r must run from epsilon(N) to N/2 in unit steps");

    // G(r) = binom(N, N/2 - r) * (2r+1) / (N/2 + r + 1); assembled as
    // binomials to keep every intermediate an exact integer:
    // G(r) = binom(N, k) - binom(N, k-1) with k = N/2 - r.
    const int k = (n_atoms - r.twice) / 2;
    auto binom = [](int n, int k_) -> unsigned __int128 {
        if (k_ < 0 || k_ > n) return 0;
        unsigned __int128 b = 1;
        for (int i = 1; i <= k_; ++i) {
            b *= static_cast<unsigned>(n - k_ + i);
            b /= static_cast<unsigned>(i);
        }
        return b;
    };
    return binom(n_atoms, k) - binom(n_atoms, k - 1);
}

double multiplicity_g(int n_atoms, HalfInt r) {
    return static_cast<double>(multiplicity_g_exact(n_atoms, r));
}

namespace {

void check_params(const ThermalParams& p) {
    if (p.n_atoms < 1) throw std::invalid_argument("thermal: n_atoms must be >= 1");
    if (p.kT <= 0.0) throw std::invalid_argument("thermal: kT must be positive");
    if (p.omega <= 0.0) throw std::invalid_argument("thermal: omega must be positive");
}

double bracket_value(HalfInt r, HalfInt r_tilde, double m) {
    const double rt = r_tilde.value();
    return rt * (2.0 * r.value() - 1.5 * rt + 0.5) + 0.5 * m * m;
}

constexpr int kHardMMax = 5'000'000;

}  // namespace

ThermalMoments thermal_moments(const ThermalParams& p) {
    check_params(p);
    const int N = p.n_atoms;
    const HalfInt eps = epsilon_of(N);

    std::vector<double> g(N / 2 + 1);  // indexed by (r.twice - eps.twice)/2
    for (int r2 = eps.twice; r2 <= N; r2 += 2)
        g[(r2 - eps.twice) / 2] = multiplicity_g(N, HalfInt::from_twice(r2));

    ThermalMoments mom;
    int stop_at = (p.m_max >= 0) ? p.m_max : kHardMMax;
    int tail_start = -1;  // first M where the tail criterion held
    bool auto_truncate = (p.m_max < 0);

    // All accumulators carry a common scale exp(ref); ref moves whenever a
    // zone-ground weight would overflow, so only ratios of the sums are
    // meaningful. ref stays 0 in ordinary regimes.
    double ref = 0.0;
    double last_slice = 0.0;  // contribution of the most recent M to z

    for (int M = 0; M <= stop_at; ++M) {
        double z_before = mom.z;
        for (int r2 = eps.twice; r2 <= N; r2 += 2) {
            const HalfInt r = HalfInt::from_twice(r2);
            const HalfInt rt = effective_spin(M, r);
            const double gw = g[(r2 - eps.twice) / 2];
            const double omega_r = rabi_frequency(M, r);
            // Zone ground weight exp(-(omega K - Omega_R r~)/kT), walked up in
            // m with a fixed ratio so only two exponentials are needed.
            const double k_quanta = M - r.value() + 0.5 * N;
            const double ground = (-p.omega * k_quanta + omega_r * rt.value()) / p.kT;
            if (ground - ref > 600.0) {
                const double scale = std::exp(ref - ground);
                mom.z *= scale;
                mom.intensity *= scale;
                mom.s3 *= scale;
                z_before *= scale;
                ref = ground;
            }
            double w = std::exp(ground - ref);
            const double step = std::exp(-omega_r / p.kT);
            for (int m2 = -rt.twice; m2 <= rt.twice; m2 += 2) {
                const double m = 0.5 * m2;
                const double weight = gw * w;
                mom.z += weight;
                mom.intensity += weight * bracket_value(r, rt, m);
                mom.s3 += weight * (rt.value() - r.value());
                w *= step;
            }
        }
        mom.m_max_used = M;
        last_slice = mom.z - z_before;
        // Truncation marker: the whole slice at this M is negligible against
        // the retained sum (this includes the Omega_R r~ Boltzmann boost and
        // the G(r) multiplicities); the horizon is then doubled for margin.
        if (auto_truncate && tail_start < 0 && M >= N + 2 && last_slice < 1e-14 * mom.z) {
            tail_start = M;
            stop_at = std::min(2 * M, kHardMMax);
        }
    }
    if (auto_truncate) {
        mom.tail_ok = tail_start >= 0;
    } else {
        mom.tail_ok = last_slice < 1e-14 * mom.z;
    }
    return mom;
}

double emission_intensity(const ThermalParams& p) {
    const ThermalMoments mom = thermal_moments(p);
    return p.i0 * mom.intensity / mom.z;
}

double intensity_classical(const ThermalParams& p) {
    check_params(p);
    return p.i0 / (1.0 + std::exp(2.0 * p.omega / p.kT));
}

double superzone_dipole(const ThermalParams& p, int K) {
    check_params(p);
    const int N = p.n_atoms;
    if (K <= N) throw std::invalid_argument("superzone_dipole: remote superzones require K > N");
    const double omega_r = 2.0 * std::sqrt(K - 0.5 * N + 0.5);
    const double x = omega_r / (2.0 * p.kT);
    const double w = std::exp(-K * p.omega / p.kT);
    const double ch = 2.0 * std::cosh(x);
    const double sh = std::sinh(x);
    return 0.5 * N * w * std::pow(ch, N) + double(N) * (N - 1) * w * std::pow(ch, N - 2) * sh * sh;
}

double superzone_zone_sum(const ThermalParams& p, int K) {
    check_params(p);
    const int N = p.n_atoms;
    if (K <= N) throw std::invalid_argument("superzone_zone_sum: remote superzones require K > N");
    const HalfInt eps = epsilon_of(N);
    const double omega_r = 2.0 * std::sqrt(K - 0.5 * N + 0.5);

    double sum = 0.0;
    for (int r2 = eps.twice; r2 <= N; r2 += 2) {
        const HalfInt r = HalfInt::from_twice(r2);
        const double gw = multiplicity_g(N, r);
        for (int m2 = -r2; m2 <= r2; m2 += 2) {
            const double m = 0.5 * m2;
            sum += gw * std::exp(-(K * p.omega + omega_r * m) / p.kT) * bracket_value(r, r, m);
        }
    }
    return sum;
}

DressedDipole dressed_dipole_oracle(HalfInt r, HalfInt r_tilde) {
    if (r.twice < 0 || r_tilde.twice < 0 || r_tilde.twice > r.twice)
        throw std::invalid_argument("dressed_dipole_oracle: need 0 <= r~ <= r");
    const SpinOps s = spin_ops(r_tilde);
    const int d = s.dim;
    const Mat id = Mat::identity(d);

    // S3 on the zone is (r~ - r) + S3~; S+S- follows from the Casimir.
    const Mat s3_zone = (r_tilde.value() - r.value()) * id + s.s3;
    const Mat spsm = (r.value() * (r.value() + 1.0)) * id - s3_zone * s3_zone + s3_zone;

    const Mat u0 = dressing_u0(d);

    DressedDipole out;
    out.conjugated = u0 * spsm * u0.adjoint();
    const double rt = r_tilde.value();
    out.closed_form = (rt * (2.0 * r.value() - 1.5 * rt + 0.5)) * id -
                      (r.value() + 0.5 - rt) * (s.sp * s.sm) -
                      0.25 * (s.sp * s.sp - 2.0 * (s.s3 * s.s3) + s.sm * s.sm);
    out.difference = out.conjugated - out.closed_form;
    out.trace_error = std::abs((out.conjugated.trace() - spsm.trace()));
    return out;
}

namespace {

ThermalScanRow scan_row(int n_atoms, double omega, double kT) {
    ThermalParams p;
    p.n_atoms = n_atoms;
    p.omega = omega;
    p.kT = kT;
    const ThermalMoments mom = thermal_moments(p);
    ThermalScanRow row;
    row.kT = kT;
    row.i_per_atom = mom.intensity / mom.z / n_atoms;
    row.i_classical = intensity_classical(p);
    const double i_single = 0.5 + (mom.s3 / mom.z) / n_atoms;
    row.correlation = (n_atoms > 1) ? (row.i_per_atom - i_single) / (n_atoms - 1) : 0.0;
    return row;
}

}  // namespace

std::vector<ThermalScanRow> temperature_scan_serial(int n_atoms, double omega,
                                                    const std::vector<double>& kT_grid) {
    std::vector<ThermalScanRow> rows(kT_grid.size());
    for (size_t i = 0; i < kT_grid.size(); ++i) rows[i] = scan_row(n_atoms, omega, kT_grid[i]);
    return rows;
}

std::vector<ThermalScanRow> temperature_scan(int n_atoms, double omega,
                                             const std::vector<double>& kT_grid) {
    std::vector<ThermalScanRow> rows(kT_grid.size());
    const long long n = static_cast<long long>(kT_grid.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) rows[i] = scan_row(n_atoms, omega, kT_grid[i]);
    return rows;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (points < 1 || lo <= 0.0 || hi < lo) throw std::invalid_argument("log_grid: bad range");
    std::vector<double> g(points);
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < points; ++i) g[i] = std::exp(la + (lb - la) * i / (points - 1));
    return g;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
    if (points < 1 || hi < lo) throw std::invalid_argument("linear_grid: bad range");
    std::vector<double> g(points);
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    for (int i = 0; i < points; ++i) g[i] = lo + (hi - lo) * i / (points - 1);
    return g;
}

}  // namespace tc
