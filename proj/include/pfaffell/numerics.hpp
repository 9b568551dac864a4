#ifndef PFAFFELL_NUMERICS_HPP
#define PFAFFELL_NUMERICS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>

#include "pfaffell/errors.hpp"

namespace pfaffell {

using complex = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// Tolerance policy shared across the toolkit.
///
/// Relative residuals are always |lhs - rhs| / max(1, |lhs|, |rhs|), so
/// identities checked near zeros or poles of theta ratios stay well scaled.
struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    double fd_tol = 1e-6;
};

/// Interval [lo, hi] on which a target function changes sign.
struct Bracket {
    double lo;
    double hi;
};

inline double rel_residual(const complex& lhs, const complex& rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

inline double rel_residual(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

/// Root of a continuous, strictly monotone function on a bracket.
///
/// Hybrid secant/bisection: a secant candidate is accepted only when it falls
/// strictly inside the current bracket, and every other step bisects so the
/// bracket provably shrinks. Stops when |f(x)| <= abs_tol or the bracket
/// width drops below abs_tol.
template <typename F>
double find_root_monotone(F&& f, Bracket bracket, Tolerance tol = {}) {
    double lo = bracket.lo;
    double hi = bracket.hi;
    if (!(lo < hi)) {
        throw domain_error("find_root_monotone: bracket must satisfy lo < hi");
    }
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw no_sign_change_error("find_root_monotone: f(lo) and f(hi) have the same sign");
    }

    const int max_iter = 200;
    for (int iter = 0; iter < max_iter; ++iter) {
        double x;
        const bool force_bisect = (iter % 2 == 1);
        if (!force_bisect && fhi != flo) {
            x = hi - fhi * (hi - lo) / (fhi - flo);
            if (!(x > lo && x < hi)) {
                x = 0.5 * (lo + hi);
            }
        } else {
            x = 0.5 * (lo + hi);
        }
        const double fx = f(x);
        if (std::abs(fx) <= tol.abs_tol) return x;
        if ((fx > 0.0) == (fhi > 0.0)) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
        if (hi - lo <= tol.abs_tol) return 0.5 * (lo + hi);
    }
    throw max_iterations_error("find_root_monotone: no convergence in 200 steps");
}

/// Default finite-difference step, balancing truncation against rounding.
inline double fd_step(const complex& x) {
    return 1e-6 * std::max(1.0, std::abs(x));
}

inline bool is_finite(const complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Second-order central difference (f(x+h) - f(x-h)) / (2h).
template <typename F>
complex central_diff(F&& f, const complex& x, double h) {
    if (!(h > 0.0)) {
        throw domain_error("central_diff: step must be positive");
    }
    complex fp, fm;
    try {
        fp = f(x + h);
        fm = f(x - h);
    } catch (const std::exception& e) {
        throw evaluation_failure(std::string("central_diff: stencil evaluation failed: ") + e.what());
    }
    if (!is_finite(fp) || !is_finite(fm)) {
        throw evaluation_failure("central_diff: non-finite value at stencil point");
    }
    return (fp - fm) / (2.0 * h);
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t x) {
    std::uint64_t s = x;
    return splitmix64(s);
}

} // namespace detail

/// Counter-based deterministic RNG.
///
/// Every consumer derives its own stream from (seed, stream id), so sweeps
/// produce identical draws regardless of evaluation order or thread count.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : state_(detail::mix64(detail::mix64(seed) ^ (stream * 0x9e3779b97f4a7c15ull + 1))) {}

    std::uint64_t next_u64() { return detail::splitmix64(state_); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

private:
    std::uint64_t state_;
};

/// Stream id from a small tuple of indices, for keying per-entry RNGs.
inline std::uint64_t stream_id(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t h = detail::mix64(a + 0x51ed270b8d5c3c3bull);
    h = detail::mix64(h ^ (b + 0x6a09e667f3bcc909ull));
    h = detail::mix64(h ^ (c + 0xbb67ae8584caa73bull));
    return h;
}

} // namespace pfaffell

#endif // PFAFFELL_NUMERICS_HPP
