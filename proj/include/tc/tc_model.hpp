#pragma once

#include <vector>

#include "tc/eigen.hpp"
#include "tc/half_int.hpp"
#include "tc/matrix.hpp"
#include "tc/pae.hpp"

namespace tc {

// Resonant Tavis-Cummings operators on the truncated field (x) atoms product
// space, with the coupling constant as the unit of energy. The field factor
// comes first: index = n * 2^N + s.
struct FullSpaceOps {
    int n_atoms = 1;
    int n_max = 1;       // photon-number cutoff
    double omega = 1.0;  // field frequency in units of the coupling
    int dim = 0;

    Mat a, a_dag;               // field factor
    Mat s3, s_plus, s_minus;    // collective spin on the 2^N atomic factor
    Mat s_squared;              // S3^2 + (S+S- + S-S+)/2, product space
    Mat h0, v, h;               // h0 = omega*(a^dag a + S3 + N/2), v = a^dag S- + a S+
};

FullSpaceOps build_full_ops(int n_atoms, int n_max, double omega);

// Total number of quanta K = a^dag a + S3 + N/2; integer spectrum >= 0.
Mat k_operator(const FullSpaceOps& ops);

// The interaction restricted to one (M, r) sector, in the ladder basis with
// descending M0: zero diagonal and off-diagonals
// t_n = sqrt(n (M+1-n) (2r+1-n)), n = 1..d-1.
struct ZoneMatrix {
    ZoneLabel label;
    SymTridiag t;
};
ZoneMatrix zone_matrix(int M, HalfInt r);

// Coherent angular-momentum basis of the 2^N atomic space: for each r,
// G(r) copies, each a ladder of 2r+1 orthonormal vectors indexed by
// ascending m. Copies are seeded by diagonalizing S^2 in the top m = r
// sector and extended downward with S-, so matrix elements of S+- between
// basis vectors are the standard spin ones.
struct AtomicIrrepLadder {
    HalfInt r;
    // states[copy][k] is the 2^N coefficient vector of |r, m = -r + k, copy>.
    std::vector<std::vector<std::vector<double>>> copies;
};
std::vector<AtomicIrrepLadder> atomic_irrep_basis(int n_atoms);

struct ExtractedZone {
    ZoneLabel label;
    int multiplicity = 0;       // number of equivalent copies found (= G(r))
    SymTridiag block;           // tridiagonal extracted from the first copy
    double off_tridiag = 0.0;   // largest matrix element outside the tridiagonal band
    double copy_spread = 0.0;   // largest entry difference between copies
    bool trusted = false;       // ladder fully below the photon cutoff margin
};

// Decomposes the interaction over simultaneous eigenspaces of the quanta
// operator and S^2. Zones whose ladder reaches within two photons of the
// cutoff are flagged untrusted.
std::vector<ExtractedZone> block_decompose(const FullSpaceOps& ops);

// Zero-order dressing rotation exp[(pi/4)(S+ - S-)] on a d-dimensional zone;
// conjugates 2*Sx into 2*S3.
Mat dressing_u0(int d);

// Product-basis indices spanning the K eigenspace.
std::vector<int> superzone_indices(const FullSpaceOps& ops, int K);

// Dressing of a remote superzone (K > N) factorized into single-atom
// exponentials built on the field phase operator. Rejected for K <= N where
// the vacuum state obstructs the factorization.
Mat dressing_u0_factorized(const FullSpaceOps& ops, int K);

// Collective form exp[(pi/4)(E (x) S+ - E^dag (x) S-)] with E the phase
// shift operator; agrees with the factorized product on remote superzones.
Mat dressing_u0_collective(const FullSpaceOps& ops);

}  // namespace tc
