#pragma once

#include "tc/matrix.hpp"

namespace tc {

// Unitary exponential of a skew-hermitian generator by scaling and squaring
// with a truncated Taylor series; the input is scaled until its Frobenius
// norm is below 0.5. Throws std::invalid_argument when the generator is not
// skew-hermitian beyond 1e-10 relative.
Mat expm_skew(const Mat& g);

}  // namespace tc
