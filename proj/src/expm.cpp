#include "tc/expm.hpp"

#include <cmath>
#include <stdexcept>

namespace tc {

Mat expm_skew(const Mat& g) {
    const int n = g.dim();
    const double norm = frob_norm(g);
    if (skewness_defect(g) > 1e-10 * std::max(1.0, norm))
        throw std::invalid_argument("expm_skew: generator is not skew-hermitian");

    int squarings = 0;
    double scaled = norm;
    while (scaled > 0.5) {
        scaled *= 0.5;
        ++squarings;
    }
    Mat x = g;
    x *= cplx(std::ldexp(1.0, -squarings), 0.0);

    // Taylor series; with ||x||_F < 0.5 the tail after 20 terms is below
    // 0.5^21/21! ~ 1e-26.
    Mat u = Mat::identity(n);
    Mat term = Mat::identity(n);
    for (int k = 1; k <= 20; ++k) {
        term = term * x;
        term *= cplx(1.0 / k, 0.0);
        u += term;
    }
    for (int s = 0; s < squarings; ++s) u = u * u;
    return u;
}

}  // namespace tc
