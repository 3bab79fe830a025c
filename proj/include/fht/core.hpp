#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace fht {

using Complex = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

// Bad numeric input (pole of Gamma, point outside (0,2pi), ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Invalid call-level parameters (empty list, grid not a power of two, ...).
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A representation whose constant cannot be evaluated (Barnes zero in a
// denominator against a nonzero numerator).
struct singular_representation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Smooth part with nonzero winding number or a near-vanishing sample.
struct invalid_smooth_part_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* what) {
    if (!is_finite(z))
        throw domain_error(std::string("non-finite value in ") + what);
}

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// |a-b| measured against |b|, falling back to absolute size for tiny b.
inline double rel_diff(Complex a, Complex b) {
    const double scale = std::abs(b);
    return scale > 0 ? std::abs(a - b) / scale : std::abs(a - b);
}

} // namespace fht
