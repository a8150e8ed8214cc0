#pragma once

// FFTW-backed transforms on contiguous row-major arrays. Plans are created
// once per (shape, kind) under a mutex and executed on caller buffers with
// the new-array interface, so concurrent execution is safe.

#include <complex>
#include <cstddef>
#include <vector>

namespace multlab::detail {

enum class FftDirection { forward, backward };

/// Unnormalized n-dimensional DFT in place; forward uses e^{-2 pi i k x / N}.
void fft_inplace(std::vector<std::complex<double>>& data, const std::vector<std::size_t>& dims,
                 FftDirection dir);

/// Unnormalized DST-I (FFTW RODFT00) of a real array in place:
/// Y_k = 2 sum_j X_j sin(pi (j+1)(k+1) / (n+1)).
void dst1_inplace(std::vector<double>& data);

}  // namespace multlab::detail
