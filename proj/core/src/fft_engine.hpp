#pragma once

#include <complex>

namespace qqpft::detail {

/// In-place unnormalized 2D complex DFT on an n-by-n row-major array.
/// sign = -1 applies exp(-2*pi*i*m*k/n) per axis, sign = +1 the conjugate.
void fft2(std::complex<double>* data, int n, int sign);

bool is_pow2(int n);

}  // namespace qqpft::detail
