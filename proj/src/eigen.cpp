#include "tc/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tc {

namespace {

double hypot2(double a, double b) { return std::hypot(a, b); }

// Implicit-shift QL sweep on (d, e); returns false if some eigenvalue needs
// more than max_iter sweeps. Eigenvalues land in d unordered.
bool ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, int max_iter) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return true;
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == max_iter) {
                    e.pop_back();
                    return false;
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && m - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    e.pop_back();
    return true;
}

// Number of eigenvalues strictly below x (Sturm count for a symmetric
// tridiagonal matrix).
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
    const int n = static_cast<int>(d.size());
    int count = 0;
    double q = d[0] - x;
    if (q < 0.0) ++count;
    for (int i = 1; i < n; ++i) {
        double off2 = e[i - 1] * e[i - 1];
        if (q == 0.0) q = 1e-300;
        q = d[i] - x - off2 / q;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> bisection_eigenvalues(const std::vector<double>& d, const std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    // Gershgorin bounds
    double lo = d[0], hi = d[0];
    for (int i = 0; i < n; ++i) {
        double rad = 0.0;
        if (i > 0) rad += std::abs(e[i - 1]);
        if (i < n - 1) rad += std::abs(e[i]);
        lo = std::min(lo, d[i] - rad);
        hi = std::max(hi, d[i] + rad);
    }
    const double span = std::max(hi - lo, 1e-300);
    std::vector<double> ev(n);
    for (int k = 0; k < n; ++k) {
        double a = lo, b = hi;
        while (b - a > 1e-15 * span + 1e-300) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(d, e, mid) > k)
                b = mid;
            else
                a = mid;
        }
        ev[k] = 0.5 * (a + b);
    }
    return ev;
}

}  // namespace

std::vector<double> tridiag_eigenvalues(const SymTridiag& t) {
    const int n = t.dim();
    if (n < 1) throw std::invalid_argument("tridiag_eigenvalues: empty matrix");
    if (static_cast<int>(t.off.size()) != n - 1)
        throw std::invalid_argument("tridiag_eigenvalues: off-diagonal length must be dim-1");
    std::vector<double> d = t.diag;
    std::vector<double> e = t.off;
    if (!ql_implicit_shift(d, e, 50)) {
        return bisection_eigenvalues(t.diag, t.off);
    }
    std::sort(d.begin(), d.end());
    return d;
}

SymEigen sym_eigen(const std::vector<double>& a, int n) {
    if (n < 1 || static_cast<int>(a.size()) != n * n)
        throw std::invalid_argument("sym_eigen: bad dimensions");

    // Householder reduction to tridiagonal form, accumulating transforms (tred2).
    std::vector<double> z = a;  // row-major workspace; becomes the orthogonal matrix
    std::vector<double> d(n, 0.0), e(n, 0.0);
    auto Z = [&](int i, int j) -> double& { return z[static_cast<size_t>(i) * n + j]; };

    for (int i = n - 1; i > 0; --i) {
        const int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(Z(i, k));
            if (scale == 0.0) {
                e[i] = Z(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    Z(i, k) /= scale;
                    h += Z(i, k) * Z(i, k);
                }
                double f = Z(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                Z(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    Z(j, i) = Z(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += Z(j, k) * Z(i, k);
                    for (int k = j + 1; k <= l; ++k) g += Z(k, j) * Z(i, k);
                    e[j] = g / h;
                    f += e[j] * Z(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = Z(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) Z(j, k) -= f * e[k] + g * Z(i, k);
                }
            }
        } else {
            e[i] = Z(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        const int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += Z(i, k) * Z(k, j);
                for (int k = 0; k <= l; ++k) Z(k, j) -= g * Z(k, i);
            }
        }
        d[i] = Z(i, i);
        Z(i, i) = 1.0;
        for (int j = 0; j <= l; ++j) Z(j, i) = Z(i, j) = 0.0;
    }

    // QL with implicit shifts on the tridiagonal form, rotating Z along (tql2).
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 50) throw std::runtime_error("sym_eigen: QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        f = Z(k, i + 1);
                        Z(k, i + 1) = s * Z(k, i) + c * f;
                        Z(k, i) = c * Z(k, i) - s * f;
                    }
                }
                if (r == 0.0 && m - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    // Sort ascending, permuting vectors with values.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });

    SymEigen out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
        out.values[k] = d[idx[k]];
        for (int i = 0; i < n; ++i) out.vectors[k][i] = Z(i, idx[k]);
    }
    return out;
}

}  // namespace tc
