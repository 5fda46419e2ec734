#pragma once

#include <vector>

#include "tc/half_int.hpp"
#include "tc/matrix.hpp"
#include "tc/pae.hpp"

namespace tc {

// Effective spin of the zone representation: r for remote zones, M/2 for
// nearby ones; the two agree on the M = 2r boundary.
HalfInt effective_spin(int M, HalfInt r);

// Generalized N-atom Rabi frequency, in units of the coupling:
//   remote (M >= 2r):  2 sqrt(M - r + 1/2)
//   nearby (M < 2r):   2 sqrt((4r - M + 1)/2)
double rabi_frequency(int M, HalfInt r);

// Branch-forced variants used for cross-zone comparisons; NaN where the
// square-root argument is not positive.
double rabi_nearby(int M, HalfInt r);
double rabi_remote(int M, HalfInt r);

// Expansion parameter alpha = (Omega_R / 2)^-2.
double alpha_param(int M, HalfInt r);

// alpha (r~ - 1/2) < 1 guarantees the square-root expansion converges.
bool expansion_converges(int M, HalfInt r);

struct LevelValue {
    HalfInt m;  // dressed magnetic index
    double energy;
};

// Closed-form third-order spectrum on a spin-r~ zone:
//   E(m) = Omega_R m [1 + (alpha/4)^2 (5 m^2 - 3 r~(r~+1) + 1)].
std::vector<LevelValue> third_order_levels(HalfInt r_tilde, double omega_r);
std::vector<LevelValue> third_order_spectrum(int M, HalfInt r);

// Interaction expanded through third order in alpha on the spin-r~ space,
// with the overall Omega_R/2 factored out:
//   v0 = 2 Sx (1 - (alpha/4)^2 / 2)
//   v1 = -(alpha/2) (1 + (alpha/4)^2 / 2) B,  B = S3 Sx + Sx S3
//   v2 = -(alpha/2)^2 S3 Sx S3
//   v3 = -(alpha/2)^3 S3 B S3 / 2
// The v1 third-order coefficient is 1/2 (alpha/4)^2, which is what the
// square-root series actually produces; with it the sum reproduces the zone
// matrix elements through O(alpha^3).
struct SeriesTerms {
    Mat v0, v1, v2, v3;
    Mat sum() const { return v0 + v1 + v2 + v3; }
};
SeriesTerms series_terms(HalfInt r_tilde, double alpha);

// Successive dressing chain U2 U1 U0 applied to the truncated series:
// U0 rotates Sx into S3, U1 = exp(alpha x D1) with D1 = ({S3,S+} - {S3,S-})/2
// and x = (1 + 3 (alpha/8)^2)/4 removes the first order, U2 removes the
// second. The conjugated series is diagonal up to an O(alpha^3) residual.
struct TransformChain {
    Mat u0, u1, u2;
    Mat conjugated;              // (U2 U1 U0) series (U2 U1 U0)^dag, dimensionless
    double offdiag_residual;     // Frobenius norm of the off-diagonal part
    std::vector<double> diagonal_energy;  // diagonal scaled by Omega_R/2, ascending m
};
TransformChain transform_chain(HalfInt r_tilde, double alpha);

// Nested-commutator identities used by the first-order dressing, checked as
// matrix equations on the spin-r~ irrep. Entry k is the relative Frobenius
// error of identity k+1.
struct CommutatorReport {
    double rel_err[4] = {0, 0, 0, 0};
    double worst() const;
};
CommutatorReport commutator_identities_check(HalfInt r_tilde);

struct SpectrumResult {
    ZoneLabel label;
    std::vector<double> exact;            // ascending
    std::vector<LevelValue> perturbative; // ascending energy
    double max_abs_dev = 0.0;
    double max_rel_dev = 0.0;
    bool converges = true;
};
SpectrumResult compare_spectra(int M, HalfInt r);

// Error of the largest level per branch formula against the exact largest
// eigenvalue, swept over M at fixed r (NaN where a branch is undefined).
struct BranchDeviationRow {
    int M;
    double dev_nearby;
    double dev_remote;
};
std::vector<BranchDeviationRow> branch_deviation_sweep(HalfInt r, int m_min, int m_max);
std::vector<BranchDeviationRow> branch_deviation_sweep_serial(HalfInt r, int m_min, int m_max);

}  // namespace tc
