#pragma once

// Large-N asymptotics of Toeplitz determinants with piecewise singular
// symbols:
//
//   D(N) = sum over minimal representations of  e^{l_0 N} N^Q E,
//   Q    = sum_r (a_r^2 - b_r^2),
//   E    = exp( sum_{k>=1} k l_k l_{-k} )
//          * prod_r f_+(x_r)^{-a_r+b_r} f_-(x_r)^{-a_r-b_r}
//          * prod_{r != s} (1 - e^{i(x_s - x_r)})^{-(a_r+b_r)(a_s-b_s)}
//          * prod_r G(1+a_r+b_r) G(1+a_r-b_r) / G(1+2a_r),
//
// with ln f_+(x) = sum_{k>0} l_{-k} e^{ikx}, ln f_-(x) = sum_{k>0} l_k
// e^{-ikx}, principal branches throughout, all products accumulated in log
// space.  For a smooth zero-winding symbol this reduces to the strong Szego
// limit exp(N l_0 + sum k l_k l_{-k}).

#include <utility>
#include <vector>

#include "fht/core.hpp"
#include "fht/fft.hpp"
#include "fht/special.hpp"
#include "fht/symbol.hpp"

namespace fht {

// Fourier coefficients of ln f0 from samples of f0 on the uniform grid
// x_j = 2pi j / G.  The log is unwrapped along the grid; a nonzero winding
// number or a near-vanishing sample is rejected.
inline SmoothSymbol smooth_log_coeffs(const std::vector<Complex>& f0_samples, int order = 256) {
    const std::size_t G = f0_samples.size();
    if (order < 0) throw usage_error("smooth_log_coeffs: negative order");
    if (!is_pow2(G) || G < std::size_t(std::max(4 * order, 4)))
        throw usage_error("smooth_log_coeffs: grid must be a power of two >= 4K");

    auto principal = [](double d) {
        while (d > pi) d -= two_pi;
        while (d < -pi) d += two_pi;
        return d;
    };

    std::vector<Complex> logs(G);
    double arg_prev = 0.0;
    for (std::size_t j = 0; j < G; ++j) {
        const Complex f = f0_samples[j];
        require_finite(f, "smooth_log_coeffs sample");
        const double mod = std::abs(f);
        if (mod < 1e-13)
            throw invalid_smooth_part_error("smooth_log_coeffs: sample too close to zero");
        const double raw = std::arg(f);
        const double arg_j = (j == 0) ? raw : arg_prev + principal(raw - std::fmod(arg_prev, two_pi));
        logs[j] = Complex(std::log(mod), arg_j);
        arg_prev = arg_j;
    }
    // close the loop back to sample 0; the net phase gain is 2pi * winding
    const double closing = arg_prev + principal(logs[0].imag() - std::fmod(arg_prev, two_pi));
    const double winding = (closing - logs[0].imag()) / two_pi;
    if (std::abs(winding - std::round(winding)) > 1e-6)
        throw invalid_smooth_part_error("smooth_log_coeffs: winding number did not resolve to an integer");
    if (std::lround(winding) != 0)
        throw invalid_smooth_part_error("smooth_log_coeffs: nonzero winding number");

    const std::vector<Complex> hat = inverse_dft_scaled(logs);
    std::vector<Complex> coeffs(std::size_t(2 * order + 1));
    for (int k = -order; k <= order; ++k)
        coeffs[std::size_t(k + order)] = hat[std::size_t((k % int(G) + int(G)) % int(G))];
    SmoothSymbol result(std::move(coeffs));

    // the truncated series must reproduce the sampled log
    const std::size_t stride = std::max<std::size_t>(1, G / 16);
    for (std::size_t j = 0; j < G; j += stride) {
        const double x = two_pi * double(j) / double(G);
        if (std::abs(result.log_value(x) - logs[j]) > 1e-6 * (1.0 + std::abs(logs[j])))
            throw invalid_smooth_part_error("smooth_log_coeffs: order too small to represent ln f0");
    }
    return result;
}

// sum_{k=1}^{K} k l_k l_{-k}; the strong Szego exponent.
inline Complex szego_sum(const SmoothSymbol& smooth) {
    Complex s = 0.0;
    for (int k = 1; k <= smooth.order(); ++k)
        s += double(k) * smooth.coeff(k) * smooth.coeff(-k);
    return s;
}

// magnitude of the last retained term, as a crude truncation indicator
inline double szego_tail_estimate(const SmoothSymbol& smooth) {
    const int K = smooth.order();
    if (K == 0) return 0.0;
    return double(K) * std::abs(smooth.coeff(K)) * std::abs(smooth.coeff(-K));
}

inline Complex log_f_plus(const SmoothSymbol& smooth, double x) {
    Complex s = 0.0;
    for (int k = 1; k <= smooth.order(); ++k)
        s += smooth.coeff(-k) * std::polar(1.0, k * x);
    return s;
}

inline Complex log_f_minus(const SmoothSymbol& smooth, double x) {
    Complex s = 0.0;
    for (int k = 1; k <= smooth.order(); ++k)
        s += smooth.coeff(k) * std::polar(1.0, -k * x);
    return s;
}

inline std::pair<Complex, Complex> f_plus_minus(const SmoothSymbol& smooth, double x) {
    return {std::exp(log_f_plus(smooth, x)), std::exp(log_f_minus(smooth, x))};
}

// The N-independent constant of one representation.  Returns an exact zero
// when a numerator Barnes factor vanishes (that term drops from the sum).
inline Complex fh_E_constant(const Representation& rep, const SmoothSymbol& smooth) {
    const auto& sing = rep.singularities;
    Complex log_e = szego_sum(smooth);
    for (const auto& s : sing) {
        log_e += (-s.alpha + s.beta) * log_f_plus(smooth, s.position);
        log_e += (-s.alpha - s.beta) * log_f_minus(smooth, s.position);
    }
    for (std::size_t r = 0; r < sing.size(); ++r) {
        for (std::size_t s = 0; s < sing.size(); ++s) {
            if (r == s) continue;
            const Complex power = -(sing[r].alpha + sing[r].beta) * (sing[s].alpha - sing[s].beta);
            if (power == Complex(0.0)) continue;
            const Complex base = 1.0 - std::polar(1.0, sing[s].position - sing[r].position);
            log_e += power * std::log(base);
        }
    }
    for (const auto& s : sing) {
        const Complex n1 = 1.0 + s.alpha + s.beta;
        const Complex n2 = 1.0 + s.alpha - s.beta;
        const Complex d = 1.0 + 2.0 * s.alpha;
        if (is_nonpositive_integer(d))
            throw singular_representation_error("fh_E_constant: G(1+2a_r) vanishes");
        if (is_nonpositive_integer(n1) || is_nonpositive_integer(n2)) return Complex(0.0);
        log_e += log_barnes_g(n1) + log_barnes_g(n2) - log_barnes_g(d);
    }
    return std::exp(log_e);
}

// Per-representation data of the determinant asymptote.  l0 is the base
// symbol's mean of ln f0; each term carries the extra constant picked up by
// its beta shift, so the term's full exponential rate is l0 + log_shift.
struct AsymptoticExpansion {
    Complex l0;
    struct Term {
        Representation rep;
        Complex log_shift;  // i sum_r n_r x_r
        Complex q;
        Complex e;
    };
    std::vector<Term> terms;

    // D(N) = sum_terms exp(N (l0 + log_shift) + Q ln N + ln E); each term is
    // assembled in log space and exponentiated once.
    Complex evaluate(long n) const {
        if (n < 1) throw usage_error("AsymptoticExpansion: need N >= 1");
        Complex d = 0.0;
        const double ln_n = std::log(double(n));
        for (const auto& t : terms) {
            if (t.e == Complex(0.0)) continue;
            d += std::exp(double(n) * (l0 + t.log_shift) + t.q * ln_n + std::log(t.e));
        }
        return d;
    }
};

inline AsymptoticExpansion build_expansion(const FHSymbol& symbol, int bound = 2, double tie_tol = 1e-8) {
    AsymptoticExpansion ex;
    ex.l0 = symbol.smooth().l0();
    const auto minimal = minimal_representations(enumerate_representations(symbol, bound), tie_tol);
    for (const auto& rep : minimal) {
        AsymptoticExpansion::Term t;
        t.log_shift = rep.log_smooth_constant_shift;
        t.q = rep.exponent_q;
        t.e = fh_E_constant(rep, symbol.smooth());
        t.rep = rep;
        ex.terms.push_back(std::move(t));
    }
    return ex;
}

inline Complex fh_determinant_asymptote(const FHSymbol& symbol, long n, int bound = 2) {
    return build_expansion(symbol, bound).evaluate(n);
}

} // namespace fht
