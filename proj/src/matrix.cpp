#include "tc/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace tc {

Mat::Mat(int n) : n_(n), a_(static_cast<size_t>(n) * n, cplx(0.0, 0.0)) {
    if (n < 1) throw std::invalid_argument("Mat: dimension must be >= 1");
}

Mat Mat::identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::diag(const std::vector<double>& d) {
    Mat m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[i];
    return m;
}

Mat Mat::diag(const std::vector<cplx>& d) {
    Mat m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[i];
    return m;
}

static void check_same_dim(const Mat& a, const Mat& b, const char* what) {
    if (a.dim() != b.dim()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

Mat& Mat::operator+=(const Mat& o) {
    check_same_dim(*this, o, "Mat::operator+=");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    check_same_dim(*this, o, "Mat::operator-=");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Mat& Mat::operator*=(cplx s) {
    for (auto& x : a_) x *= s;
    return *this;
}

Mat Mat::adjoint() const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

Mat Mat::transpose() const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

cplx Mat::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

std::vector<cplx> Mat::diagonal() const {
    std::vector<cplx> d(n_);
    for (int i = 0; i < n_; ++i) d[i] = (*this)(i, i);
    return d;
}

Mat operator+(Mat a, const Mat& b) {
    a += b;
    return a;
}

Mat operator-(Mat a, const Mat& b) {
    a -= b;
    return a;
}

Mat operator*(const Mat& a, const Mat& b) {
    check_same_dim(a, b, "Mat::operator*");
    const int n = a.dim();
    Mat r(n);
    // i-k-j loop order keeps the inner loop contiguous.
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

Mat operator*(cplx s, Mat a) {
    a *= s;
    return a;
}

Mat operator*(Mat a, cplx s) {
    a *= s;
    return a;
}

Mat kron(const Mat& a, const Mat& b) {
    const int na = a.dim(), nb = b.dim();
    Mat r(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return r;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat anticommutator(const Mat& a, const Mat& b) { return a * b + b * a; }

double frob_norm(const Mat& a) {
    double s = 0.0;
    for (const auto& x : a.data()) s += std::norm(x);
    return std::sqrt(s);
}

double max_abs(const Mat& a) {
    double m = 0.0;
    for (const auto& x : a.data()) m = std::max(m, std::abs(x));
    return m;
}

double hermiticity_defect(const Mat& a) { return frob_norm(a - a.adjoint()); }

double skewness_defect(const Mat& a) { return frob_norm(a + a.adjoint()); }

double offdiag_norm(const Mat& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace tc
