#pragma once

// Exact finite-N side: symbol Fourier coefficients by offset-grid quadrature,
// dense pivoted log-determinants, and the brute-force unitary-group average
//
//   det_M(M_{ij}) = (1/M!) prod_i integral dx_i/2pi f(x_i) prod_{i<j} |z_i - z_j|^2
//
// evaluated as an M-dimensional sum over the same kind of grid (M <= 3).

#include <vector>

#include "fht/core.hpp"
#include "fht/fft.hpp"
#include "fht/symbol.hpp"

namespace fht {

// f sampled at x_j = (j + 1/2) 2pi/G.  Half-cell offset keeps samples off
// the singular points; the smooth part is synthesised with one FFT.
inline std::vector<Complex> sample_symbol(const FHSymbol& symbol, std::size_t grid) {
    if (!is_pow2(grid)) throw usage_error("sample_symbol: grid must be a power of two");
    const auto& smooth = symbol.smooth();
    const int K = smooth.order();
    if (grid < std::size_t(4 * K)) throw usage_error("sample_symbol: grid below 4K");

    // ln f0 on the grid: sum_k l_k e^{-ik x_j} with the half-cell phase
    std::vector<Complex> work(grid, Complex(0.0));
    const double h = two_pi / double(grid);
    for (int k = -K; k <= K; ++k) {
        const Complex c = smooth.coeff(k);
        if (c == Complex(0.0)) continue;
        const std::size_t bin = std::size_t((k % int(grid) + int(grid)) % int(grid));
        work[bin] += c * std::polar(1.0, -k * h / 2.0);
    }
    fft_inplace(work, false);  // sum_k a_k e^{-2pi i jk/G}

    std::vector<Complex> out(grid);
    for (std::size_t j = 0; j < grid; ++j) {
        const double x = (double(j) + 0.5) * h;
        Complex lg = work[j];
        bool zero = false;
        for (const auto& s : symbol.singularities()) {
            const Complex part = FHSymbol::log_singular_factor(s, x);
            if (part.real() == -std::numeric_limits<double>::infinity()) {
                zero = true;
                break;
            }
            lg += part;
        }
        out[j] = zero ? Complex(0.0) : std::exp(lg);
    }
    return out;
}

// M(k) = integral_0^{2pi} dx/2pi e^{ikx} f(x) for |k| <= n-1, by midpoint
// quadrature on the offset grid, with a coarse-grid (G/4) recomputation as a
// refinement-style error estimate.
struct ToeplitzCoefficients {
    int n = 0;                       // covers k in [-(n-1), n-1]
    std::size_t grid = 0;
    std::vector<Complex> coeffs;     // index k + n - 1
    std::vector<Complex> coeffs_coarse;
    double quad_err = 0.0;           // max_k |fine - coarse|

    Complex at(int k) const {
        if (std::abs(k) > n - 1) throw usage_error("ToeplitzCoefficients: index out of range");
        return coeffs[std::size_t(k + n - 1)];
    }
    Complex at_coarse(int k) const { return coeffs_coarse[std::size_t(k + n - 1)]; }
};

inline std::size_t default_grid(int n) {
    return std::max<std::size_t>(next_pow2(std::size_t(8 * n)), 65536);
}

namespace detail {

inline std::vector<Complex> coeffs_on_grid(const FHSymbol& symbol, int n, std::size_t grid) {
    const std::vector<Complex> samples = sample_symbol(symbol, grid);
    std::vector<Complex> hat = inverse_dft_scaled(samples);
    std::vector<Complex> out(std::size_t(2 * n - 1));
    for (int k = -(n - 1); k <= n - 1; ++k) {
        const std::size_t bin = std::size_t((k % int(grid) + int(grid)) % int(grid));
        // shift by the half-cell offset: e^{i k h/2}
        out[std::size_t(k + n - 1)] = hat[bin] * std::polar(1.0, pi * double(k) / double(grid));
    }
    return out;
}

} // namespace detail

inline ToeplitzCoefficients toeplitz_coefficients(const FHSymbol& symbol, int n, std::size_t grid = 0) {
    if (n < 1) throw usage_error("toeplitz_coefficients: need N >= 1");
    if (grid == 0) grid = default_grid(n);
    if (!is_pow2(grid) || grid < std::size_t(8 * n))
        throw usage_error("toeplitz_coefficients: grid must be a power of two >= 8N");

    ToeplitzCoefficients tc;
    tc.n = n;
    tc.grid = grid;
    tc.coeffs = detail::coeffs_on_grid(symbol, n, grid);
    // two halvings: successive offset grids can straddle a discontinuity the
    // same way, making a single halving look deceptively converged
    tc.coeffs_coarse = grid / 4 >= std::size_t(8 * n) ? detail::coeffs_on_grid(symbol, n, grid / 4)
                                                      : tc.coeffs;
    for (std::size_t i = 0; i < tc.coeffs.size(); ++i)
        tc.quad_err = std::max(tc.quad_err, std::abs(tc.coeffs[i] - tc.coeffs_coarse[i]));
    return tc;
}

// det = e^{log_modulus + i phase}; log_modulus = -inf flags an exactly
// singular matrix, sign_ok = false a pivot too small to trust.
struct LogDeterminant {
    double log_modulus = 0.0;
    double phase = 0.0;
    bool sign_ok = true;

    Complex value() const {
        if (log_modulus == -std::numeric_limits<double>::infinity()) return Complex(0.0);
        return std::polar(std::exp(log_modulus), phase);
    }
};

// Row-pivoted in-place LU of a dense complex matrix, log-accumulated.
inline LogDeterminant log_determinant_inplace(std::vector<Complex>& a, int n) {
    LogDeterminant ld;
    double scale = 0.0;
    for (const Complex& v : a) scale = std::max(scale, std::abs(v));
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a[std::size_t(col) * n + col]);
        for (int r = col + 1; r < n; ++r) {
            const double m = std::abs(a[std::size_t(r) * n + col]);
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (best == 0.0) {
            ld.log_modulus = -std::numeric_limits<double>::infinity();
            return ld;
        }
        if (best < 1e-14 * scale) ld.sign_ok = false;
        if (piv != col) {
            for (int c = 0; c < n; ++c)
                std::swap(a[std::size_t(piv) * n + c], a[std::size_t(col) * n + c]);
            ld.phase += pi;  // row swap flips the sign
        }
        const Complex d = a[std::size_t(col) * n + col];
        ld.log_modulus += std::log(std::abs(d));
        ld.phase += std::arg(d);
        const Complex inv_d = 1.0 / d;
        for (int r = col + 1; r < n; ++r) {
            const Complex m = a[std::size_t(r) * n + col] * inv_d;
            if (m == Complex(0.0)) continue;
            a[std::size_t(r) * n + col] = m;
            for (int c = col + 1; c < n; ++c)
                a[std::size_t(r) * n + c] -= m * a[std::size_t(col) * n + c];
        }
    }
    ld.phase = std::remainder(ld.phase, two_pi);
    return ld;
}

inline LogDeterminant toeplitz_determinant(const ToeplitzCoefficients& coeffs, int n) {
    if (n < 1) throw usage_error("toeplitz_determinant: need N >= 1");
    if (n > coeffs.n) throw usage_error("toeplitz_determinant: coefficients do not cover N");
    std::vector<Complex> a(std::size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[std::size_t(i) * n + j] = coeffs.at(i - j);
    return log_determinant_inplace(a, n);
}

// Determinant plus a refinement-based relative error estimate (fine grid vs
// the G/4 grid stored alongside the coefficients).
struct DeterminantResult {
    Complex det;
    LogDeterminant log_det;
    double quad_err = 0.0;  // relative
};

inline DeterminantResult toeplitz_determinant_with_error(const FHSymbol& symbol, int n,
                                                         std::size_t grid = 0) {
    const ToeplitzCoefficients tc = toeplitz_coefficients(symbol, n, grid);
    DeterminantResult res;
    res.log_det = toeplitz_determinant(tc, n);
    res.det = res.log_det.value();

    std::vector<Complex> a(std::size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[std::size_t(i) * n + j] = tc.at_coarse(i - j);
    const Complex coarse = log_determinant_inplace(a, n).value();
    const double scale = std::max(std::abs(res.det), std::abs(coarse));
    res.quad_err = scale > 0 ? std::abs(res.det - coarse) / scale : 0.0;
    return res;
}

// Direct M-dimensional midpoint quadrature of the unitary-average identity;
// deliberately brute force, no determinant shortcuts.
inline Complex cue_average_oracle(const FHSymbol& symbol, int m, std::size_t grid = 256) {
    if (m < 1 || m > 3) throw usage_error("cue_average_oracle: only M in {1,2,3} is supported");
    const std::size_t G = grid;
    const std::vector<Complex> f = sample_symbol(symbol, G);

    if (m == 1) {
        Complex s = 0.0;
        for (const Complex& v : f) s += v;
        return s / double(G);
    }

    // |z_i - z_j|^2 depends only on i-j on a uniform grid
    std::vector<double> w(G);
    const double h = two_pi / double(G);
    for (std::size_t d = 0; d < G; ++d) w[d] = 2.0 - 2.0 * std::cos(h * double(d));

    auto wdiff = [&](std::size_t i, std::size_t j) { return w[i >= j ? i - j : j - i]; };

    if (m == 2) {
        Complex s = 0.0;
        for (std::size_t i = 0; i < G; ++i) {
            Complex row = 0.0;
            for (std::size_t j = 0; j < G; ++j) row += f[j] * wdiff(i, j);
            s += f[i] * row;
        }
        return s / (2.0 * double(G) * double(G));
    }

    Complex s = 0.0;
    for (std::size_t i = 0; i < G; ++i) {
        for (std::size_t j = 0; j < G; ++j) {
            const double wij = wdiff(i, j);
            if (wij == 0.0) continue;  // coincident angles contribute nothing
            Complex inner = 0.0;
            for (std::size_t k = 0; k < G; ++k) inner += f[k] * (wdiff(i, k) * wdiff(j, k));
            s += f[i] * f[j] * wij * inner;
        }
    }
    return s / (6.0 * double(G) * double(G) * double(G));
}

} // namespace fht
