#pragma once

// Complex log-Gamma and Barnes G.
//
// log_gamma: Lanczos approximation (g = 607/128, 15 terms) with the
// reflection formula for Re z < 1/2.  Good to ~1e-13 relative in double.
//
// barnes_g / log_barnes_g: the recurrence G(z+1) = Gamma(z) G(z) shifts the
// argument to Re z >= 20, where the asymptotic expansion
//   ln G(z+1) = (z^2/2 - 1/12) ln z - 3z^2/4 + (z/2) ln 2pi + zeta'(-1)
//               + sum_{k>=1} B_{2k+2} / (4k(k+1) z^{2k})
// (DLMF 5.17.5, rearranged to a standalone series) converges below 1e-15.
// log_barnes_g is exact modulo 2*pi*i; exponentials of it are unambiguous.

#include <array>
#include <vector>

#include "fht/core.hpp"

namespace fht {

namespace detail {

inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,
    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

inline constexpr double zeta_prime_minus1 = -0.16542114370045092921391966;
inline constexpr double glaisher_log = 0.24875447703378426254725299;  // ln A
inline constexpr double half_log_two_pi = 0.91893853320467274178032974;
inline constexpr double log_two_pi = 1.83787706640934548356065947;

// B_{2k+2}/(4k(k+1)) for k = 1..6; enough for Re z >= 20.
inline constexpr std::array<double, 6> barnes_series = {
    -1.0 / 240.0,        1.0 / 1008.0,  -1.0 / 1440.0,
    1.0 / 1056.0,        -691.0 / 327600.0, 1.0 / 144.0,
};

} // namespace detail

// True when z sits (to within tol) on a pole of Gamma / zero of G.
inline bool is_nonpositive_integer(Complex z, double tol = 1e-12) {
    if (z.real() > 0.5 || std::abs(z.imag()) > tol) return false;
    return std::abs(z.real() - std::round(z.real())) <= tol;
}

// Principal-branch ln Gamma(z) for Re z >= 1/2; modulo 2*pi*i after
// reflection.  Poles are rejected.
inline Complex log_gamma(Complex z) {
    require_finite(z, "log_gamma");
    if (is_nonpositive_integer(z))
        throw domain_error("log_gamma: pole at a non-positive integer");
    if (z.real() < 0.5) {
        // ln Gamma(z) = ln pi - ln sin(pi z) - ln Gamma(1 - z)
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    Complex s = detail::lanczos_c[0];
    for (int k = 1; k < 15; ++k) s += detail::lanczos_c[k] / (z - 1.0 + double(k));
    const Complex t = z + (detail::lanczos_g - 0.5);
    return (z - 0.5) * std::log(t) - t + detail::half_log_two_pi + std::log(s);
}

inline Complex gamma_fn(Complex z) { return std::exp(log_gamma(z)); }

// ln G(z), modulo 2*pi*i.  Throws at the zeros of G (z = 0, -1, -2, ...).
inline Complex log_barnes_g(Complex z) {
    require_finite(z, "log_barnes_g");
    if (is_nonpositive_integer(z))
        throw domain_error("log_barnes_g: G vanishes at non-positive integers");
    Complex shift_sum = 0.0;
    while (z.real() < 20.0) {
        shift_sum += log_gamma(z);
        z += 1.0;
    }
    const Complex y = z - 1.0;
    const Complex ly = std::log(y);
    Complex s = (0.5 * y * y - 1.0 / 12.0) * ly - 0.75 * y * y +
                0.5 * y * detail::log_two_pi + detail::zeta_prime_minus1;
    Complex ypow = y * y;
    for (double c : detail::barnes_series) {
        s += c / ypow;
        ypow *= y * y;
    }
    return s - shift_sum;
}

struct BarnesG {
    Complex value;
    bool is_zero;  // argument was a non-positive integer
};

inline BarnesG barnes_g_checked(Complex z) {
    if (is_nonpositive_integer(z)) return {Complex(0.0), true};
    return {std::exp(log_barnes_g(z)), false};
}

inline Complex barnes_g(Complex z) { return barnes_g_checked(z).value; }

// G(1+a+b) G(1+a-b) / G(1+2a), in log space.  A zero in the numerator gives
// an exact 0; a zero in the denominator alone is a singular representation.
inline Complex barnes_ratio(Complex a, Complex b) {
    const Complex n1 = 1.0 + a + b;
    const Complex n2 = 1.0 + a - b;
    const Complex d = 1.0 + 2.0 * a;
    const bool dz = is_nonpositive_integer(d);
    if (is_nonpositive_integer(n1) || is_nonpositive_integer(n2)) {
        if (dz)
            throw singular_representation_error(
                "barnes_ratio: zero against zero in G(1+a+b)G(1+a-b)/G(1+2a)");
        return Complex(0.0);
    }
    if (dz)
        throw singular_representation_error(
            "barnes_ratio: G(1+2a) vanishes with nonzero numerator");
    return std::exp(log_barnes_g(n1) + log_barnes_g(n2) - log_barnes_g(d));
}

} // namespace fht
