#pragma once

#include <vector>

namespace tc {

// Real symmetric tridiagonal matrix: diag has length d, off length d-1.
// Zone interaction blocks have diag identically zero, which makes the
// spectrum symmetric about the origin.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> off;

    int dim() const { return static_cast<int>(diag.size()); }
};

// All eigenvalues, ascending. Implicit-shift QL; if QL has not converged
// after 50 sweeps for some eigenvalue the whole problem is redone by
// Sturm-sequence bisection.
std::vector<double> tridiag_eigenvalues(const SymTridiag& t);

// Dense real symmetric eigenproblem with eigenvectors (Householder
// tridiagonalization followed by QL with accumulation). `a` is row-major
// n x n; only used for small blocks (collective-spin sectors).
struct SymEigen {
    std::vector<double> values;               // ascending
    std::vector<std::vector<double>> vectors; // vectors[k] is the k-th eigenvector
};
SymEigen sym_eigen(const std::vector<double>& a, int n);

}  // namespace tc
