#pragma once

#include <complex>
#include <span>
#include <vector>

namespace nel::fft {

using cplx = std::complex<double>;

/// Unnormalized complex DFTs over row-major arrays (last index fastest).
///   forward:  X_k = sum_j x_j exp(-2 pi i j.k / N)
///   backward: x_j = sum_k X_k exp(+2 pi i j.k / N)
/// Plans are cached per shape and shared between threads; execution is reentrant.
void forward(std::span<const int> shape, std::span<const cplx> in, std::span<cplx> out);
void backward(std::span<const int> shape, std::span<const cplx> in, std::span<cplx> out);

/// Signed wavenumber of FFT bin i out of n (0, 1, ..., n/2, -(n/2-1), ..., -1).
inline int signed_mode(int i, int n) { return i <= n / 2 ? i : i - n; }

/// Bin index holding signed mode m (inverse of signed_mode).
inline int bin_of(int m, int n) { return ((m % n) + n) % n; }

}  // namespace nel::fft
