#ifndef PFAFFELL_THETA_HPP
#define PFAFFELL_THETA_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>

#include "pfaffell/errors.hpp"
#include "pfaffell/numerics.hpp"

namespace pfaffell {

/// Purely imaginary modular parameter tau = i*t, t > 0, with cached nome
/// q = exp(-pi t). The solvers additionally restrict themselves to the
/// fundamental-domain edge t >= 1; the evaluator accepts any t > 0.
struct ModularParam {
    double t;
    double q;

    explicit ModularParam(double t_in) : t(t_in), q(std::exp(-pi * t_in)) {
        if (!(t_in > 0.0) || !std::isfinite(t_in)) {
            throw domain_error("ModularParam: t must be positive and finite");
        }
    }

    complex tau() const { return complex(0.0, t); }
};

/// Theta index a in {1,2,3,4}, understood modulo 4.
struct ThetaIndex {
    int a;

    ThetaIndex(int raw) : a(((raw - 1) % 4 + 4) % 4 + 1) {} // NOLINT(google-explicit-constructor)
};

/// Half-periods omega_0..omega_3; theta_a vanishes on omega_{a-1} + Z + Z*tau.
inline complex half_period(int k, const ModularParam& tau) {
    switch (((k % 4) + 4) % 4) {
        case 0: return complex(0.0, 0.0);
        case 1: return complex(0.5, 0.0);
        case 2: return complex(0.5, 0.5 * tau.t);
        default: return complex(0.0, 0.5 * tau.t);
    }
}

/// Distance from u to the nearest point of offset + Z + Z*tau.
inline double lattice_distance(const complex& u, const complex& offset, const ModularParam& tau) {
    const complex v = u - offset;
    const double n = std::round(v.real());
    const double m = std::round(v.imag() / tau.t);
    return std::abs(v - complex(n, m * tau.t));
}

namespace detail {

// Shift signs under u -> u+1 and u -> u+tau (the constant parts of the
// quasi-periodicity phases).
inline double unit_shift_sign(int a) { return (a == 1 || a == 2) ? -1.0 : 1.0; }
inline double tau_shift_sign(int a) { return (a == 1 || a == 4) ? -1.0 : 1.0; }

// d-th derivative of sin at x, d mod 4 cycling sin, cos, -sin, -cos.
inline complex sin_deriv(const complex& x, int d) {
    switch (d & 3) {
        case 0: return std::sin(x);
        case 1: return std::cos(x);
        case 2: return -std::sin(x);
        default: return -std::cos(x);
    }
}

inline complex cos_deriv(const complex& x, int d) {
    switch (d & 3) {
        case 0: return std::cos(x);
        case 1: return -std::sin(x);
        case 2: return -std::cos(x);
        default: return std::sin(x);
    }
}

inline constexpr int theta_series_k_cap = 24;
inline constexpr double theta_series_cutoff = 1e-16;

// d-th u-derivative of the theta q-series, summed directly at u with no
// lattice reduction. Intended for |Im u| <~ t/2 where convergence is fastest.
inline complex theta_series_deriv_raw(int a, const complex& u, const ModularParam& tau, int d) {
    const double t = tau.t;
    const double abs_im = std::abs(u.imag());
    complex sum(0.0, 0.0);
    double scale = 0.0;

    if (a == 1 || a == 2) {
        // 2 sum_k (-1)^k q^{(k+1/2)^2} sin((2k+1) pi u)  (cos for a = 2)
        for (int k = 0; k <= theta_series_k_cap; ++k) {
            const double half = k + 0.5;
            const double freq = (2 * k + 1) * pi;
            const double log_bound = -pi * t * half * half + freq * abs_im + d * std::log(freq);
            if (scale > 0.0 && log_bound < std::log(theta_series_cutoff * scale)) break;
            const double amp = 2.0 * std::exp(-pi * t * half * half) * std::pow(freq, d);
            const complex osc = (a == 1) ? sin_deriv(freq * u, d) : cos_deriv(freq * u, d);
            const complex term = ((a == 1 && (k & 1)) ? -amp : amp) * osc;
            sum += term;
            scale = std::max({scale, std::abs(sum), std::abs(term)});
            if (std::abs(term) <= theta_series_cutoff * scale) break;
        }
        return sum;
    }

    // 1 + 2 sum_{k>=1} (+-1)^k q^{k^2} cos(2 pi k u)  (a = 3 plus sign, a = 4 alternating)
    if (d == 0) {
        sum = complex(1.0, 0.0);
        scale = 1.0;
    }
    for (int k = 1; k <= theta_series_k_cap; ++k) {
        const double freq = 2.0 * pi * k;
        const double log_bound = -pi * t * k * k + freq * abs_im + d * std::log(freq);
        if (scale > 0.0 && log_bound < std::log(theta_series_cutoff * scale)) break;
        const double amp = 2.0 * std::exp(-pi * t * k * k) * std::pow(freq, d);
        const complex osc = cos_deriv(freq * u, d);
        const complex term = ((a == 4 && (k & 1)) ? -amp : amp) * osc;
        sum += term;
        scale = std::max({scale, std::abs(sum), std::abs(term)});
        if (std::abs(term) <= theta_series_cutoff * scale) break;
    }
    return sum;
}

struct LatticeReduction {
    complex u0;  // reduced argument, |Re| <= 1/2 + eps, |Im| <= t/2 + eps
    long n;      // integer shift along 1
    long m;      // integer shift along tau
};

inline LatticeReduction reduce_to_cell(const complex& u, const ModularParam& tau) {
    LatticeReduction r;
    r.n = std::lround(u.real());
    r.m = std::lround(u.imag() / tau.t);
    r.u0 = u - complex(static_cast<double>(r.n), static_cast<double>(r.m) * tau.t);
    return r;
}

inline double binomial_small(int n, int k) {
    double acc = 1.0;
    for (int j = 1; j <= k; ++j) acc = acc * (n - k + j) / j;
    return acc;
}

// d-th derivative with reduction: theta_a(u) = K e^{-2 pi i m u0} theta_a(u0)
// with K = eps^n sigma^m e^{pi m^2 t}, so Leibniz brings powers of (-2 pi i m).
inline complex theta_deriv_reduced(int a, const complex& u, const ModularParam& tau, int d) {
    const LatticeReduction red = reduce_to_cell(u, tau);
    if (red.m == 0 && red.n == 0) {
        return theta_series_deriv_raw(a, u, tau, d);
    }
    double parity = 1.0;
    if ((red.n & 1) != 0) parity *= unit_shift_sign(a);
    if ((red.m & 1) != 0) parity *= tau_shift_sign(a);
    if (red.m == 0) {
        return parity * theta_series_deriv_raw(a, red.u0, tau, d);
    }
    const double md = static_cast<double>(red.m);
    const complex k_factor = parity * std::exp(complex(pi * md * md * tau.t, 0.0));
    const complex exp_factor = std::exp(complex(0.0, -2.0 * pi * md) * red.u0);
    const complex lambda(0.0, -2.0 * pi * md);
    complex sum(0.0, 0.0);
    complex lambda_pow(1.0, 0.0);
    // sum over j of C(d,j) lambda^{d-j} theta^{(j)}(u0), lowest power last
    for (int j = d; j >= 0; --j) {
        sum += binomial_small(d, j) * lambda_pow * theta_series_deriv_raw(a, red.u0, tau, j);
        lambda_pow *= lambda;
    }
    return k_factor * exp_factor * sum;
}

} // namespace detail

/// Jacobi theta value theta_a(u | tau). The argument is reduced modulo the
/// lattice Z + Z*tau before summation and the quasi-periodicity phases are
/// reapplied, keeping the q-series in its fastest-converging cell.
inline complex theta(ThetaIndex a, const complex& u, const ModularParam& tau) {
    return detail::theta_deriv_reduced(a.a, u, tau, 0);
}

/// Term-wise differentiated q-series, d theta_a / du^order, order in [1, 4].
inline complex theta_deriv(ThetaIndex a, const complex& u, const ModularParam& tau, int order) {
    if (order < 1 || order > 4) {
        throw unsupported_order_error("theta_deriv: order must be between 1 and 4");
    }
    return detail::theta_deriv_reduced(a.a, u, tau, order);
}

/// Theta constants (theta_2(0), theta_3(0), theta_4(0), theta_1'(0)).
struct ThetaConstants {
    double th2;
    double th3;
    double th4;
    double th1_prime;
};

inline ThetaConstants theta_constants(const ModularParam& tau) {
    ThetaConstants c{};
    c.th2 = detail::theta_series_deriv_raw(2, complex(0.0, 0.0), tau, 0).real();
    c.th3 = detail::theta_series_deriv_raw(3, complex(0.0, 0.0), tau, 0).real();
    c.th4 = detail::theta_series_deriv_raw(4, complex(0.0, 0.0), tau, 0).real();
    c.th1_prime = detail::theta_series_deriv_raw(1, complex(0.0, 0.0), tau, 1).real();
    return c;
}

/// Taylor coefficients theta_a^{(d)}(0) / d! for d = 0..max_order (<= 8),
/// from the term-wise differentiated q-series at the origin.
inline std::array<complex, 9> theta_taylor_at_zero(ThetaIndex a, const ModularParam& tau, int max_order) {
    if (max_order < 0 || max_order > 8) {
        throw unsupported_order_error("theta_taylor_at_zero: max_order must be between 0 and 8");
    }
    std::array<complex, 9> coeffs{};
    double factorial = 1.0;
    for (int d = 0; d <= max_order; ++d) {
        if (d > 0) factorial *= d;
        coeffs[d] = detail::theta_series_deriv_raw(a.a, complex(0.0, 0.0), tau, d) / factorial;
    }
    return coeffs;
}

/// Absolute defects of the shift relations
///   theta_a(u+1)   = eps_a theta_a(u)
///   theta_a(u+tau) = sig_a e^{-i pi tau - 2 pi i u} theta_a(u).
struct QuasiPeriodicityResidual {
    double res_1;
    double res_tau;
    complex lhs_1, rhs_1;      // the two sides of the shift-by-1 relation
    complex lhs_tau, rhs_tau;  // the two sides of the shift-by-tau relation
};

inline QuasiPeriodicityResidual quasi_periodicity_residual(ThetaIndex a, const complex& u,
                                                           const ModularParam& tau) {
    QuasiPeriodicityResidual r{};
    r.lhs_1 = theta(a, u + 1.0, tau);
    r.rhs_1 = detail::unit_shift_sign(a.a) * theta(a, u, tau);
    r.res_1 = std::abs(r.lhs_1 - r.rhs_1);
    r.lhs_tau = theta(a, u + tau.tau(), tau);
    const complex phase = std::exp(complex(0.0, -pi) * tau.tau() + complex(0.0, -2.0 * pi) * u);
    r.rhs_tau = detail::tau_shift_sign(a.a) * phase * theta(a, u, tau);
    r.res_tau = std::abs(r.lhs_tau - r.rhs_tau);
    return r;
}

} // namespace pfaffell

#endif // PFAFFELL_THETA_HPP
