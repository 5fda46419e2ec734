#include "tc/tc_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "tc/expm.hpp"

namespace tc {

namespace {

constexpr int kDimCap = 4096;

Mat field_annihilator(int n_max) {
    Mat a(n_max + 1);
    for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

// Single-atom operator embedded at position j of the N-fold product
// (atom 0 is the most significant index; local index 0 is spin up).
Mat embed_atom(int n_atoms, int j, const Mat& op) {
    Mat r = (j == 0) ? op : Mat::identity(2);
    for (int k = 1; k < n_atoms; ++k) r = kron(r, (k == j) ? op : Mat::identity(2));
    return r;
}

Mat sigma_plus() {
    Mat s(2);
    s(0, 1) = 1.0;
    return s;
}

Mat sigma_3() {
    Mat s(2);
    s(0, 0) = 0.5;
    s(1, 1) = -0.5;
    return s;
}

// m eigenvalue of a product basis state (set bit = spin down), twice-valued.
int m_twice_of_state(int n_atoms, unsigned s) {
    return n_atoms - 2 * std::popcount(s);
}

// Phase shift operator E|n> = |n-1>, E|0> = 0.
Mat phase_shift(int n_max) {
    Mat e(n_max + 1);
    for (int n = 1; n <= n_max; ++n) e(n - 1, n) = 1.0;
    return e;
}

}  // namespace

FullSpaceOps build_full_ops(int n_atoms, int n_max, double omega) {
    if (n_atoms < 1 || n_atoms > 6)
        throw std::invalid_argument("build_full_ops: 1 <= n_atoms <= 6");
    if (n_max < 0) throw std::invalid_argument("build_full_ops: n_max must be >= 0");
    const int atom_dim = 1 << n_atoms;
    const long long dim = static_cast<long long>(n_max + 1) * atom_dim;
    if (dim > kDimCap) throw std::invalid_argument("build_full_ops: product dimension exceeds cap");

    FullSpaceOps ops;
    ops.n_atoms = n_atoms;
    ops.n_max = n_max;
    ops.omega = omega;
    ops.dim = static_cast<int>(dim);

    ops.a = field_annihilator(n_max);
    ops.a_dag = ops.a.adjoint();

    ops.s3 = Mat(atom_dim);
    ops.s_plus = Mat(atom_dim);
    for (int j = 0; j < n_atoms; ++j) {
        ops.s3 += embed_atom(n_atoms, j, sigma_3());
        ops.s_plus += embed_atom(n_atoms, j, sigma_plus());
    }
    ops.s_minus = ops.s_plus.adjoint();

    const Mat s2_atomic = ops.s3 * ops.s3 +
                          0.5 * (ops.s_plus * ops.s_minus + ops.s_minus * ops.s_plus);
    const Mat id_field = Mat::identity(n_max + 1);
    const Mat id_atoms = Mat::identity(atom_dim);

    ops.s_squared = kron(id_field, s2_atomic);
    ops.v = kron(ops.a_dag, ops.s_minus) + kron(ops.a, ops.s_plus);
    ops.h0 = omega * (kron(ops.a_dag * ops.a, id_atoms) + kron(id_field, ops.s3) +
                      (0.5 * n_atoms) * kron(id_field, id_atoms));
    ops.h = ops.h0 + ops.v;
    return ops;
}

Mat k_operator(const FullSpaceOps& ops) {
    const Mat id_field = Mat::identity(ops.n_max + 1);
    const Mat id_atoms = Mat::identity(1 << ops.n_atoms);
    return kron(ops.a_dag * ops.a, id_atoms) + kron(id_field, ops.s3) +
           (0.5 * ops.n_atoms) * kron(id_field, id_atoms);
}

ZoneMatrix zone_matrix(int M, HalfInt r) {
    ZoneMatrix z;
    z.label = classify_zone(M, r);
    const int d = z.label.dim;
    z.t.diag.assign(d, 0.0);
    z.t.off.resize(d - 1);
    for (int n = 1; n < d; ++n)
        z.t.off[n - 1] = std::sqrt(double(n) * (M + 1 - n) * (r.twice + 1 - n));
    return z;
}

std::vector<AtomicIrrepLadder> atomic_irrep_basis(int n_atoms) {
    const int atom_dim = 1 << n_atoms;

    Mat s3(atom_dim), sp(atom_dim);
    for (int j = 0; j < n_atoms; ++j) {
        s3 += embed_atom(n_atoms, j, sigma_3());
        sp += embed_atom(n_atoms, j, sigma_plus());
    }
    const Mat sm = sp.adjoint();
    const Mat s2 = s3 * s3 + 0.5 * (sp * sm + sm * sp);

    std::vector<AtomicIrrepLadder> ladders;
    for (int r2 = n_atoms; r2 >= n_atoms % 2; r2 -= 2) {
        const HalfInt r = half(r2);

        // Highest-weight sector m = r.
        std::vector<int> sector;
        for (unsigned s = 0; s < static_cast<unsigned>(atom_dim); ++s)
            if (m_twice_of_state(n_atoms, s) == r2) sector.push_back(static_cast<int>(s));
        const int sd = static_cast<int>(sector.size());

        std::vector<double> proj(static_cast<size_t>(sd) * sd);
        for (int ai = 0; ai < sd; ++ai)
            for (int bi = 0; bi < sd; ++bi) proj[static_cast<size_t>(ai) * sd + bi] = s2(sector[ai], sector[bi]).real();
        const SymEigen eig = sym_eigen(proj, sd);

        const double want = r.value() * (r.value() + 1.0);
        AtomicIrrepLadder lad;
        lad.r = r;
        for (int k = 0; k < sd; ++k) {
            if (std::abs(eig.values[k] - want) > 1e-8) continue;
            // Copy seeded at m = r, extended downward with S-.
            std::vector<std::vector<double>> ladder;
            std::vector<double> vec(atom_dim, 0.0);
            for (int ai = 0; ai < sd; ++ai) vec[sector[ai]] = eig.vectors[k][ai];
            ladder.push_back(vec);
            for (int step = 0; step < r2; ++step) {
                std::vector<double> nxt(atom_dim, 0.0);
                double norm = 0.0;
                for (int row = 0; row < atom_dim; ++row) {
                    double acc = 0.0;
                    for (int col = 0; col < atom_dim; ++col) acc += sm(row, col).real() * ladder.back()[col];
                    nxt[row] = acc;
                    norm += acc * acc;
                }
                norm = std::sqrt(norm);
                for (auto& xv : nxt) xv /= norm;
                ladder.push_back(nxt);
            }
            std::reverse(ladder.begin(), ladder.end());  // ascending m
            lad.copies.push_back(std::move(ladder));
        }
        ladders.push_back(std::move(lad));
    }
    return ladders;
}

std::vector<ExtractedZone> block_decompose(const FullSpaceOps& ops) {
    const int atom_dim = 1 << ops.n_atoms;
    const auto ladders = atomic_irrep_basis(ops.n_atoms);

    std::vector<ExtractedZone> zones;
    for (const auto& lad : ladders) {
        const int r2 = lad.r.twice;
        for (int M = 0; M <= ops.n_max + r2; ++M) {
            // Admissible m window for this zone under the photon cutoff:
            // n = M - r - m must lie in [0, n_max].
            const int m2_lo = std::max(-r2, 2 * M - r2 - 2 * ops.n_max);
            const int m2_hi = std::min(r2, 2 * M - r2);
            if (m2_hi < m2_lo) continue;
            const int d_present = (m2_hi - m2_lo) / 2 + 1;

            ExtractedZone ez;
            ez.label = classify_zone(M, lad.r);
            ez.multiplicity = static_cast<int>(lad.copies.size());
            ez.trusted = (M + 2 <= ops.n_max) && (d_present == ez.label.dim);

            bool first = true;
            for (const auto& copy : lad.copies) {
                // Full-space ladder vectors, ascending m (descending M0).
                std::vector<std::vector<double>> basis;
                for (int m2 = m2_lo; m2 <= m2_hi; m2 += 2) {
                    const int n = M - (r2 + m2) / 2;
                    const int k = (m2 + r2) / 2;  // index into the copy ladder
                    std::vector<double> full(ops.dim, 0.0);
                    for (int s = 0; s < atom_dim; ++s) full[n * atom_dim + s] = copy[k][s];
                    basis.push_back(std::move(full));
                }
                // Project the interaction.
                const int d = static_cast<int>(basis.size());
                std::vector<std::vector<double>> vb(d, std::vector<double>(ops.dim, 0.0));
                for (int b = 0; b < d; ++b)
                    for (int row = 0; row < ops.dim; ++row) {
                        double acc = 0.0;
                        for (int col = 0; col < ops.dim; ++col)
                            acc += ops.v(row, col).real() * basis[b][col];
                        vb[b][row] = acc;
                    }
                SymTridiag t;
                t.diag.assign(d, 0.0);
                t.off.assign(d > 0 ? d - 1 : 0, 0.0);
                double leak = 0.0;
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b) {
                        double el = 0.0;
                        for (int row = 0; row < ops.dim; ++row) el += basis[a][row] * vb[b][row];
                        if (a == b)
                            t.diag[a] = el;
                        else if (a == b - 1)
                            t.off[a] = el;
                        else if (a > b + 1 || b > a + 1)
                            leak = std::max(leak, std::abs(el));
                    }
                if (first) {
                    ez.block = t;
                    ez.off_tridiag = leak;
                    first = false;
                } else {
                    ez.off_tridiag = std::max(ez.off_tridiag, leak);
                    for (int i = 0; i + 1 < d; ++i)
                        ez.copy_spread = std::max(ez.copy_spread, std::abs(t.off[i] - ez.block.off[i]));
                }
            }
            zones.push_back(std::move(ez));
        }
    }
    std::sort(zones.begin(), zones.end(), [](const ExtractedZone& a, const ExtractedZone& b) {
        if (a.label.M != b.label.M) return a.label.M < b.label.M;
        return a.label.r.twice < b.label.r.twice;
    });
    return zones;
}

Mat dressing_u0(int d) {
    if (d < 1) throw std::invalid_argument("dressing_u0: dimension must be >= 1");
    const SpinOps s = spin_ops(half(d - 1));
    return expm_skew((cplx(M_PI / 4.0, 0.0)) * (s.sp - s.sm));
}

std::vector<int> superzone_indices(const FullSpaceOps& ops, int K) {
    const int atom_dim = 1 << ops.n_atoms;
    std::vector<int> idx;
    for (int n = 0; n <= ops.n_max; ++n)
        for (int s = 0; s < atom_dim; ++s) {
            const int k2 = 2 * n + m_twice_of_state(ops.n_atoms, static_cast<unsigned>(s)) + ops.n_atoms;
            if (k2 == 2 * K) idx.push_back(n * atom_dim + s);
        }
    return idx;
}

Mat dressing_u0_collective(const FullSpaceOps& ops) {
    const Mat e = phase_shift(ops.n_max);
    const Mat g = kron(e, ops.s_plus) - kron(e.adjoint(), ops.s_minus);
    return expm_skew(cplx(M_PI / 4.0, 0.0) * g);
}

Mat dressing_u0_factorized(const FullSpaceOps& ops, int K) {
    if (K <= ops.n_atoms)
        throw std::invalid_argument(
            "dressing_u0_factorized: factorization holds only on remote superzones (K > N)");
    const Mat e = phase_shift(ops.n_max);
    Mat u = Mat::identity(ops.dim);
    for (int j = 0; j < ops.n_atoms; ++j) {
        const Mat sp_j = embed_atom(ops.n_atoms, j, sigma_plus());
        const Mat g = kron(e, sp_j) - kron(e.adjoint(), sp_j.adjoint());
        u = u * expm_skew(cplx(M_PI / 4.0, 0.0) * g);
    }
    return u;
}

}  // namespace tc
