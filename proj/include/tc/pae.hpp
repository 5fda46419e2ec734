#pragma once

#include <string>
#include <vector>

#include "tc/half_int.hpp"
#include "tc/matrix.hpp"

namespace tc {

// Polynomial algebra of excitations: generators a0, a+, a- with
// [a0, a+-] = +-a+- and a+ a- = p(a0), where p is a structure polynomial
// with c-number coefficients, normalized so |c0| = 1. The ordered real
// roots bound the finite-dimensional irreducible representations.
struct StructurePolynomial {
    double c0 = 1.0;
    std::vector<double> roots;  // ascending; repeats encode multiplicity

    int order() const { return static_cast<int>(roots.size()); }
    double eval(double x) const;

    // Boson algebra: c0 = 1, single root at 0.
    static StructurePolynomial heisenberg_weyl();
    // Collective-spin algebra of index r: c0 = -1, roots {-r, r+1}.
    static StructurePolynomial su2(HalfInt r);
};

// Tolerance used to detect coincident roots (double roots at the M = 2r
// boundary) and to cancel matching factors in isomorphism ratios.
inline constexpr double kRootTol = 1e-9;

// Irrep taxonomy: multiplicities of the left/right bounding roots plus the
// dimension. dim == 0 marks an unbounded (truncated) representation; a
// missing bounding root is recorded as multiplicity 0.
struct IrrepClass {
    int k_minus = 1;
    int k_plus = 1;
    int dim = 0;

    std::string str() const;
};

// Isomorphic iff dimensions agree and {k-,k+} agree as unordered pairs.
bool isomorphic(const IrrepClass& a, const IrrepClass& b);

enum class ZoneKind { Nearby, Intermediate, Remote };

const char* zone_kind_name(ZoneKind k);

// One conserved-(M, r) sector of the interaction algebra. The single
// physical finite-dimensional irrep has d = min(M+1, 2r+1).
struct ZoneLabel {
    int M = 0;
    HalfInt r;
    ZoneKind kind = ZoneKind::Remote;
    int dim = 1;
    IrrepClass irrep;
};

// Third-order structure polynomial of the excitation algebra attached to a
// (M, r) sector: c0 = -1, roots -(M-r)/2, (M-r)/2 - r, (M-r)/2 + r + 1.
StructurePolynomial tc_structure_polynomial(int M, HalfInt r);

ZoneLabel classify_zone(int M, HalfInt r);

enum class Realization { Right, Left };

struct PaeGenerators {
    Mat a0, a_plus, a_minus;
    int dim = 0;
    StructurePolynomial poly;
    int pivot_index = 0;
    Realization realization = Realization::Right;
};

// Boson realization anchored at roots[pivot_index] with a0 = q_j + n,
// n = 0..d-1 (a+ creates). Fails when the structure polynomial is negative
// somewhere on the spanned spectrum, which would force anti-conjugate
// ladder operators.
PaeGenerators realize_pae_right(const StructurePolynomial& p, int pivot_index, int d);

// Mirror realization with a0 = q_j - 1 - n (a+ annihilates).
PaeGenerators realize_pae_left(const StructurePolynomial& p, int pivot_index, int d);

enum class MapOrientation { Direct, Reversed };

// Exact isomorphism between same-class irreps of two algebras: the target
// generators are built from the source ones through a square-root ratio of
// structure polynomials, with matching numerator/denominator factors
// cancelled before evaluation. Direct keeps the ladder direction, Reversed
// swaps raising and lowering. Throws when the classes are not isomorphic or
// a zero/negative survives under the square root.
PaeGenerators isomorphism_map(const PaeGenerators& source, const StructurePolynomial& target_poly,
                              int target_pivot, MapOrientation orientation);

// Spin-r matrices in the ascending-m basis (m = -r..r); s3 diagonal,
// sp entries sqrt(r(r+1) - m(m+1)).
struct SpinOps {
    HalfInt r;
    int dim = 0;
    Mat s3, sp, sm;
};
SpinOps spin_ops(HalfInt r);

// Irrep class of a spectral window [left, left + d - 1]: k- and k+ are the
// root multiplicities at `left` and `left + d` (0 when no root sits there,
// i.e. a truncated representation).
IrrepClass irrep_class_for_window(const StructurePolynomial& p, double left, int d);

// Irrep class of the window a realization actually spans.
IrrepClass irrep_class_of(const PaeGenerators& g);

}  // namespace tc
