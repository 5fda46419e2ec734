#pragma once

#include <complex>
#include <vector>

namespace tc {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. All algebra generators, zone
// transforms and full-space operators are carried by this one type; complex
// scalars are used uniformly even where entries happen to be real.
class Mat {
  public:
    Mat() = default;
    explicit Mat(int n);
    static Mat identity(int n);
    static Mat diag(const std::vector<double>& d);
    static Mat diag(const std::vector<cplx>& d);

    int dim() const { return n_; }
    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(cplx s);

    Mat adjoint() const;
    Mat transpose() const;
    cplx trace() const;
    std::vector<cplx> diagonal() const;

    const std::vector<cplx>& data() const { return a_; }

  private:
    int n_ = 0;
    std::vector<cplx> a_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(cplx s, Mat a);
Mat operator*(Mat a, cplx s);

Mat kron(const Mat& a, const Mat& b);
Mat commutator(const Mat& a, const Mat& b);
Mat anticommutator(const Mat& a, const Mat& b);

double frob_norm(const Mat& a);
double max_abs(const Mat& a);
// ||A - A^dag||_F and ||A + A^dag||_F
double hermiticity_defect(const Mat& a);
double skewness_defect(const Mat& a);
// Frobenius norm of the strictly off-diagonal part.
double offdiag_norm(const Mat& a);

}  // namespace tc
