#pragma once

// Radix-2 complex FFT, power-of-two sizes only (grid preconditions enforce
// that everywhere in this library).

#include <vector>

#include "fht/core.hpp"

namespace fht {

// In-place DFT: a[k] <- sum_j a[j] e^{-2 pi i jk/n} (inverse=false), or the
// conjugate kernel without the 1/n factor (inverse=true).
inline void fft_inplace(std::vector<Complex>& a, bool inverse = false) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw usage_error("fft: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? two_pi : -two_pi) / double(len);
        const Complex wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Complex w = 1.0;
            for (std::size_t j = 0; j < len / 2; ++j) {
                const Complex u = a[i + j];
                const Complex v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// (1/n) sum_j a[j] e^{+2 pi i jk/n}, the quadrature kernel used for Fourier
// coefficients of symbols sampled on uniform grids.
inline std::vector<Complex> inverse_dft_scaled(std::vector<Complex> a) {
    const double inv = 1.0 / double(a.size());
    fft_inplace(a, true);
    for (auto& v : a) v *= inv;
    return a;
}

} // namespace fht
