#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace besov::fft {

// Real-to-complex forward transform: out[k] = sum_m in[m] e^{-2 pi i k m / N},
// out has N/2+1 entries. Plans are cached per size and guarded by a mutex.
void forward(std::span<const double> in, std::span<std::complex<double>> out);

// Complex-to-real inverse, normalized by 1/N (round trip is the identity).
void inverse(std::span<const std::complex<double>> in, std::span<double> out,
             std::size_t n);

} // namespace besov::fft
