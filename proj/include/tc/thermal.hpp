#pragma once

#include <cstdint>
#include <vector>

#include "tc/half_int.hpp"
#include "tc/matrix.hpp"

namespace tc {

// Smallest admissible Dicke index: 0 for even N, 1/2 for odd N.
HalfInt epsilon_of(int n_atoms);

// Number of equivalent spin-r irreps in the 2^N atomic space,
// G(r) = N! (2r+1) / ((N/2+r+1)! (N/2-r)!), computed exactly in 128-bit
// integers (good through N = 100) and returned as double for weighting.
double multiplicity_g(int n_atoms, HalfInt r);
unsigned __int128 multiplicity_g_exact(int n_atoms, HalfInt r);

struct ThermalParams {
    int n_atoms = 1;
    double omega = 10.0;  // field frequency over coupling
    double kT = 1.0;      // temperature over coupling
    int m_max = -1;       // partition truncation; -1 selects it from the tail criterion
    double i0 = 1.0;      // intensity unit
};

// Accumulated zero-order ensemble sums: partition function, dipole-squared
// numerator, and the S3 numerator, in a fixed (M ascending, r ascending,
// m ascending) order. The three sums share one overall scale (rescaled
// together if weights would overflow), so only their ratios are meaningful.
struct ThermalMoments {
    double z = 0.0;
    double intensity = 0.0;  // sum of weights * brackets
    double s3 = 0.0;         // sum of weights * (r~ - r)
    int m_max_used = 0;
    bool tail_ok = true;
};
ThermalMoments thermal_moments(const ThermalParams& p);

// Total emission rate over I0: the zero-order thermal average of S+S-,
// summed over zones with per-zone Rabi splitting and effective spin
// r~ = min(M/2, r).
double emission_intensity(const ThermalParams& p);

// Free-space (no cavity) intensity per atom: 1 / (1 + exp(2 omega / kT)).
double intensity_classical(const ThermalParams& p);

// Unnormalized superzone contribution to <S+S->, from the factorized
// dressing: (N/2) w (2 cosh x)^N + N(N-1) w (2 cosh x)^(N-2) sinh^2 x with
// x = Omega_R/(2 kT), Omega_R = 2 sqrt(K - N/2 + 1/2) and w = exp(-K omega/kT).
// Only defined on remote superzones (K > N).
double superzone_dipole(const ThermalParams& p, int K);

// Independent route: the same contribution assembled zone by zone from the
// per-zone sums with G(r) multiplicities.
double superzone_zone_sum(const ThermalParams& p, int K);

// The dressed dipole operator U0 (S+S-) U0^-1 on a spin-r~ zone computed two
// ways: explicit conjugation (trace preserving) and the closed form as
// printed, whose linear term differs; the difference matrix is returned for
// inspection rather than asserted away.
struct DressedDipole {
    Mat conjugated;   // path (a): explicit conjugation
    Mat closed_form;  // path (b)
    Mat difference;
    double trace_error;  // |Tr(a) - Tr(S+S-)|
};
DressedDipole dressed_dipole_oracle(HalfInt r, HalfInt r_tilde);

struct ThermalScanRow {
    double kT = 0.0;
    double i_per_atom = 0.0;
    double i_classical = 0.0;
    double correlation = 0.0;  // two-particle correlation term
};

// Emission per atom against temperature; rows are independent and the
// parallel version is bit-identical to the serial one.
std::vector<ThermalScanRow> temperature_scan(int n_atoms, double omega,
                                             const std::vector<double>& kT_grid);
std::vector<ThermalScanRow> temperature_scan_serial(int n_atoms, double omega,
                                                    const std::vector<double>& kT_grid);

std::vector<double> log_grid(double lo, double hi, int points);
std::vector<double> linear_grid(double lo, double hi, int points);

}  // namespace tc
