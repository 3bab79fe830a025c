#pragma once

// Canonical piecewise-singular symbols on the unit circle:
//
//   f(x) = f0(x) * prod_r  e^{i b_r (x - x_r - pi sign(x - x_r))}
//                          * (2 - 2 cos(x - x_r))^{a_r},     x in (0, 2pi),
//
// with f0 smooth, non-vanishing and of zero winding, held as the Fourier
// coefficients l_k of ln f0.  Alternative representations of the same symbol
// shift the b_r by integers with zero sum; the compensating constant
// e^{i sum_r n_r x_r} is folded into the smooth part.

#include <algorithm>
#include <utility>
#include <vector>

#include "fht/core.hpp"

namespace fht {

// One discontinuity point: power exponent `alpha` (a_r) and jump exponent
// `beta` (b_r).  Integrability requires Re a_r > -1/2.
struct FHSingularity {
    double position;  // x_r in [0, 2pi)
    Complex alpha;
    Complex beta;
};

// Smooth factor f0, stored as l_k = integral dx/2pi e^{ikx} ln f0(x) for
// |k| <= order.  ln f0(x) = sum_k l_k e^{-ikx}.
class SmoothSymbol {
  public:
    SmoothSymbol() : coeffs_(1, Complex(0.0)) {}

    explicit SmoothSymbol(std::vector<Complex> log_coeffs) : coeffs_(std::move(log_coeffs)) {
        if (coeffs_.size() % 2 == 0) throw usage_error("SmoothSymbol: need coefficients for k in [-K, K]");
        for (Complex c : coeffs_) require_finite(c, "SmoothSymbol");
    }

    static SmoothSymbol constant(Complex log_value) {
        return SmoothSymbol(std::vector<Complex>{log_value});
    }

    int order() const { return int(coeffs_.size() / 2); }

    Complex coeff(int k) const {
        const int K = order();
        return (k < -K || k > K) ? Complex(0.0) : coeffs_[std::size_t(k + K)];
    }

    Complex l0() const { return coeffs_[std::size_t(order())]; }

    // ln f0(x), truncated series.
    Complex log_value(double x) const {
        const int K = order();
        Complex s = 0.0;
        for (int k = -K; k <= K; ++k) {
            if (coeff(k) == Complex(0.0)) continue;
            s += coeff(k) * std::polar(1.0, -k * x);
        }
        return s;
    }

    Complex value(double x) const { return std::exp(log_value(x)); }

    SmoothSymbol with_extra_constant(Complex log_shift) const {
        std::vector<Complex> c = coeffs_;
        c[std::size_t(order())] += log_shift;
        return SmoothSymbol(std::move(c));
    }

  private:
    std::vector<Complex> coeffs_;  // index k + order
};

class FHSymbol {
  public:
    // Positions must stay at least min_separation apart (pairwise factors of
    // the asymptotic constant diverge as points collide).
    static constexpr double min_separation = 1e-6;

    FHSymbol() = default;

    FHSymbol(SmoothSymbol smooth, std::vector<FHSingularity> singularities)
        : smooth_(std::move(smooth)), sing_(std::move(singularities)) {
        std::sort(sing_.begin(), sing_.end(),
                  [](const FHSingularity& a, const FHSingularity& b) { return a.position < b.position; });
        for (const auto& s : sing_) {
            if (!(s.position >= 0.0 && s.position < two_pi))
                throw usage_error("FHSymbol: singularity position outside [0, 2pi)");
            if (!(s.alpha.real() > -0.5))
                throw domain_error("FHSymbol: need Re a_r > -1/2 for an integrable symbol");
            require_finite(s.alpha, "FHSymbol alpha");
            require_finite(s.beta, "FHSymbol beta");
        }
        for (std::size_t i = 1; i < sing_.size(); ++i) {
            if (sing_[i].position - sing_[i - 1].position < min_separation)
                throw usage_error("FHSymbol: singularity positions closer than the minimal separation");
        }
        if (sing_.size() >= 2) {
            // wrap-around gap between the last point and the first
            if (sing_.front().position + two_pi - sing_.back().position < min_separation)
                throw usage_error("FHSymbol: singularity positions closer than the minimal separation");
        }
    }

    const SmoothSymbol& smooth() const { return smooth_; }
    const std::vector<FHSingularity>& singularities() const { return sing_; }

    // ln of the singular factor attached to one point, principal branches.
    static Complex log_singular_factor(const FHSingularity& s, double x) {
        const double d = x - s.position;
        const double sgn = (d > 0) - (d < 0);
        Complex lg = s.beta * Complex(0.0, d - pi * sgn);
        if (s.alpha != Complex(0.0)) {
            const double m = 2.0 - 2.0 * std::cos(d);
            if (m == 0.0) {
                if (s.alpha.real() < 0.0)
                    throw domain_error("FHSymbol: evaluation at a divergent singular point");
                return Complex(-std::numeric_limits<double>::infinity(), 0.0);
            }
            lg += s.alpha * std::log(m);
        }
        return lg;
    }

    Complex evaluate(double x) const {
        if (!(x > 0.0 && x < two_pi)) throw domain_error("FHSymbol: evaluate needs x in (0, 2pi)");
        Complex lg = smooth_.log_value(x);
        for (const auto& s : sing_) {
            const Complex part = log_singular_factor(s, x);
            if (part.real() == -std::numeric_limits<double>::infinity()) return Complex(0.0);
            lg += part;
        }
        return std::exp(lg);
    }

    // Same symbol multiplied by the constant c (enters l_0 as log c).
    FHSymbol scaled(Complex c) const {
        return FHSymbol(smooth_.with_extra_constant(std::log(c)), sing_);
    }

  private:
    SmoothSymbol smooth_;
    std::vector<FHSingularity> sing_;
};

inline FHSymbol identity_symbol() { return FHSymbol(SmoothSymbol(), {}); }

// Piecewise-constant counting symbol: e^{i alpha} on (0, x_r), 1 on
// (x_r, 2pi).  Parameters b = alpha/2pi at the two arc endpoints and the
// constant smooth part e^{i b x_r}.
inline FHSymbol jump_symbol(double alpha, double xr) {
    if (!(xr > 0.0 && xr < two_pi)) throw usage_error("jump_symbol: need 0 < x_r < 2pi");
    const double b = alpha / two_pi;
    if (b == 0.0) return FHSymbol(SmoothSymbol::constant(Complex(0.0, 0.0)), {});
    return FHSymbol(SmoothSymbol::constant(Complex(0.0, b * xr)),
                    {{0.0, Complex(0.0), Complex(-b, 0.0)}, {xr, Complex(0.0), Complex(b, 0.0)}});
}

// One-particle density-matrix symbol: the jump factor above times
// (2-2cos(x - x_r))^{1/2} (2-2cos x)^{1/2}.
inline FHSymbol density_matrix_symbol(double alpha, double xr) {
    if (!(xr > 0.0 && xr < two_pi)) throw usage_error("density_matrix_symbol: need 0 < x_r < 2pi");
    const double b = alpha / two_pi;
    return FHSymbol(SmoothSymbol::constant(Complex(0.0, b * xr)),
                    {{0.0, Complex(0.5), Complex(-b, 0.0)}, {xr, Complex(0.5), Complex(b, 0.0)}});
}

// Density-density symbol: (2-2cos x)(2-2cos(x - x_r)); real and nonnegative.
inline FHSymbol density_density_symbol(double xr) {
    if (!(xr > 0.0 && xr < two_pi)) throw usage_error("density_density_symbol: need 0 < x_r < 2pi");
    return FHSymbol(SmoothSymbol(),
                    {{0.0, Complex(1.0), Complex(0.0)}, {xr, Complex(1.0), Complex(0.0)}});
}

// Smooth test symbol e^{t cos x}: l_{+-1} = t/2, no singularities.
inline FHSymbol exp_cos_symbol(double t) {
    return FHSymbol(SmoothSymbol({Complex(t / 2.0), Complex(0.0), Complex(t / 2.0)}), {});
}

// One admissible (a_r, b_r) assignment for a symbol: betas shifted by an
// integer vector with zero sum, smooth part multiplied by the compensating
// constant, exponent Q = sum_r (a_r^2 - b_r^2).
struct Representation {
    std::vector<FHSingularity> singularities;
    std::vector<int> shifts;
    Complex smooth_constant_shift;      // e^{i sum_r n_r x_r}
    Complex log_smooth_constant_shift;  // i sum_r n_r x_r, exact
    Complex exponent_q;

    bool is_base() const {
        return std::all_of(shifts.begin(), shifts.end(), [](int n) { return n == 0; });
    }

    // The representation as a standalone symbol (for pointwise checks).
    FHSymbol as_symbol(const FHSymbol& base) const {
        return FHSymbol(base.smooth().with_extra_constant(log_smooth_constant_shift), singularities);
    }
};

inline Complex representation_exponent(const std::vector<FHSingularity>& sing) {
    Complex q = 0.0;
    for (const auto& s : sing) q += s.alpha * s.alpha - s.beta * s.beta;
    return q;
}

// All representations reachable with |n_r| <= bound, sum_r n_r = 0, in
// lexicographic shift order.  The zero shift (the input itself) is included.
inline std::vector<Representation> enumerate_representations(const FHSymbol& symbol, int bound) {
    if (bound < 1) throw usage_error("enumerate_representations: bound must be >= 1");
    const auto& sing = symbol.singularities();
    const std::size_t R = sing.size();
    std::vector<Representation> out;

    std::vector<int> shifts(R, 0);
    auto emit = [&]() {
        Representation rep;
        rep.shifts = shifts;
        rep.singularities = sing;
        double phase = 0.0;
        for (std::size_t r = 0; r < R; ++r) {
            rep.singularities[r].beta += double(shifts[r]);
            phase += shifts[r] * sing[r].position;
        }
        rep.log_smooth_constant_shift = Complex(0.0, phase);
        rep.smooth_constant_shift = std::polar(1.0, phase);
        rep.exponent_q = representation_exponent(rep.singularities);
        out.push_back(std::move(rep));
    };

    if (R == 0) {
        emit();
        return out;
    }

    // depth-first over shift vectors; the last component absorbs the balance
    auto rec = [&](auto&& self, std::size_t r, int partial_sum) -> void {
        if (r + 1 == R) {
            const int last = -partial_sum;
            if (std::abs(last) <= bound) {
                shifts[r] = last;
                emit();
            }
            return;
        }
        for (int n = -bound; n <= bound; ++n) {
            shifts[r] = n;
            self(self, r + 1, partial_sum + n);
        }
    };
    rec(rec, 0, 0);
    return out;
}

// The subset minimizing Re sum_r (b_r^2 - a_r^2) within tie_tol, i.e.
// maximizing Re Q; input order (lexicographic in shifts) is preserved.
// The tolerance absorbs parameters specified to ~8 digits (an alpha given as
// 3.14159265 leaves an exponent gap of ~1.1e-9 that must still tie).
inline std::vector<Representation> minimal_representations(const std::vector<Representation>& reps,
                                                           double tie_tol = 1e-8) {
    if (reps.empty()) throw usage_error("minimal_representations: empty input");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& r : reps) best = std::max(best, r.exponent_q.real());
    std::vector<Representation> out;
    for (const auto& r : reps)
        if (r.exponent_q.real() >= best - tie_tol) out.push_back(r);
    return out;
}

} // namespace fht
