#pragma once

// Ground-state correlators of M impenetrable bosons / free fermions on a
// ring of length L, each in two forms: an exact finite-size Toeplitz
// determinant and its closed-form large-M asymptote.
//
//   g_alpha        <phi+(x) e^{i alpha N(x)} phi(0)>   = (1/L) det_{M-1}
//   exp_counting   <e^{i alpha N(x)}>                  = det_M
//   density_density <rho(x) rho(0)>  via (4/L^2) sin^2(pi x/L) det_{M-2}
//
// N(x) counts particles in (0, x).  alpha is 2pi-periodic; it is reduced to
// (-pi, pi] before anything else, and |b| = 1/2 (alpha = pi) switches the
// asymptotes to the two-representation sum.

#include "fht/asymptotics.hpp"
#include "fht/core.hpp"
#include "fht/exact.hpp"
#include "fht/symbol.hpp"

namespace fht {

constexpr double degenerate_beta_tol = 1e-9;

struct GasParameters {
    int particles;       // M
    double length;       // L
    double separation;   // x, 0 < x < L
    double alpha = 0.0;  // counting phase

    GasParameters(int m, double l, double x, double a = 0.0)
        : particles(m), length(l), separation(x), alpha(a) {
        if (m < 3) throw usage_error("GasParameters: need M >= 3");
        if (!(l > 0.0)) throw usage_error("GasParameters: need L > 0");
        if (!(x > 0.0 && x < l)) throw usage_error("GasParameters: need 0 < x < L");
        if (!std::isfinite(a)) throw usage_error("GasParameters: alpha must be finite");
    }

    double rho() const { return double(particles) / length; }
    double xr() const { return two_pi * separation / length; }

    // alpha folded into (-pi, pi]
    double reduced_alpha() const {
        double a = std::remainder(alpha, two_pi);
        if (a == -pi) a = pi;
        return a;
    }

    double beta() const { return reduced_alpha() / two_pi; }
    bool degenerate() const { return std::abs(std::abs(beta()) - 0.5) < degenerate_beta_tol; }
};

// ---- one-particle functions --------------------------------------------

inline Complex g_alpha_exact(const GasParameters& p, std::size_t grid = 0) {
    const auto sym = density_matrix_symbol(p.reduced_alpha(), p.xr());
    const LogDeterminant d =
        toeplitz_determinant(toeplitz_coefficients(sym, p.particles - 1, grid), p.particles - 1);
    return d.value() / p.length;
}

// e^{i alpha (Mx/L - 1/2)} G^2(3/2+b) G^2(3/2-b) rho (2M sin(pi x/L))^{-(1/2+2b^2)},
// valid for |b| < 1/2; at b = 0 it is the density-matrix law
// rho G^4(3/2) (2M sin(pi x/L))^{-1/2}.
inline Complex g_alpha_asymptotic(const GasParameters& p) {
    if (p.degenerate())
        throw domain_error("g_alpha_asymptotic: b = 1/2 is the free-fermion case; "
                           "use free_fermion_green");
    const double b = p.beta();
    const double a = p.reduced_alpha();
    const double m = double(p.particles);
    const double xl = p.separation / p.length;
    const Complex gg = std::exp(2.0 * (log_barnes_g(Complex(1.5 + b)) + log_barnes_g(Complex(1.5 - b))));
    const double amp = std::pow(2.0 * m * std::sin(pi * xl), -(0.5 + 2.0 * b * b));
    return std::polar(1.0, a * (m * xl - 0.5)) * gg * p.rho() * amp;
}

// sin(pi M x/L) / (L sin(pi x/L)), the exact Dirichlet kernel.
inline Complex free_fermion_green(const GasParameters& p) {
    const double xl = p.separation / p.length;
    return Complex(std::sin(pi * p.particles * xl) / (p.length * std::sin(pi * xl)));
}

// The same function assembled from the two-representation determinant
// asymptote of the b = 1/2 symbol (they agree identically).
inline Complex free_fermion_green_fh(const GasParameters& p) {
    const auto sym = density_matrix_symbol(pi, p.xr());
    return fh_determinant_asymptote(sym, p.particles - 1) / p.length;
}

// ---- exponential counting correlator ------------------------------------

inline Complex exp_counting_exact(const GasParameters& p, std::size_t grid = 0) {
    const double a = p.reduced_alpha();
    if (a == 0.0) return Complex(1.0);  // identity symbol
    const auto sym = jump_symbol(a, p.xr());
    return toeplitz_determinant(toeplitz_coefficients(sym, p.particles, grid), p.particles).value();
}

// Minimal-representation sum for the jump symbol: a single term
// e^{i alpha M x/L} (2M sin(pi x/L))^{-2b^2} [G(1+b)G(1-b)]^2 for |b| < 1/2,
// and the real two-term combination
// 2 cos(pi M x/L) (2M sin(pi x/L))^{-1/2} [G(3/2)G(1/2)]^2 at b = 1/2.
inline Complex exp_counting_asymptotic(const GasParameters& p) {
    const double a = p.reduced_alpha();
    if (a == 0.0) return Complex(1.0);
    return fh_determinant_asymptote(jump_symbol(a, p.xr()), p.particles);
}

// ---- density-density ------------------------------------------------------

struct DensityDensity {
    double exact;         // (4/L^2) sin^2(pi x/L) det_{M-2}
    double det_identity;  // (M-2)^2 / (4 sin^2(pi x/L)), the leading-order determinant value
    double leading;       // rho^2
};

inline DensityDensity density_density(const GasParameters& p, std::size_t grid = 0) {
    if (p.particles < 4) throw usage_error("density_density: need M >= 4");
    const double s = std::sin(pi * p.separation / p.length);
    const auto sym = density_density_symbol(p.xr());
    const Complex det =
        toeplitz_determinant(toeplitz_coefficients(sym, p.particles - 2, grid), p.particles - 2)
            .value();
    DensityDensity out;
    out.exact = 4.0 / (p.length * p.length) * s * s * det.real();
    out.det_identity = double(p.particles - 2) * double(p.particles - 2) / (4.0 * s * s);
    out.leading = p.rho() * p.rho();
    return out;
}

} // namespace fht
