#ifndef PFAFFELL_TESTS_ORACLES_HPP
#define PFAFFELL_TESTS_ORACLES_HPP

// Test-only oracles, independent of the library's evaluation path. The theta
// oracle sums the defining series literally over |k| <= 30 with no argument
// reduction, no early exit and no trigonometric regrouping.

#include <complex>

#include "pfaffell/numerics.hpp"

namespace oracles {

using pfaffell::complex;
using pfaffell::pi;

inline constexpr int k_range = 30;

/// theta_a(u | tau), tau = i t, summed term by term from the definitions:
///   theta_1(u) = -sum exp(i pi tau (k+1/2)^2 + 2 pi i (u+1/2)(k+1/2))
///   theta_2(u) =  sum exp(i pi tau (k+1/2)^2 + 2 pi i  u     (k+1/2))
///   theta_3(u) =  sum exp(i pi tau k^2       + 2 pi i  u      k)
///   theta_4(u) =  sum exp(i pi tau k^2       + 2 pi i (u+1/2) k)
inline complex theta_direct(int a, const complex& u, double t) {
    const complex tau(0.0, t);
    const complex ipi(0.0, pi);
    const complex two_ipi(0.0, 2.0 * pi);
    complex sum(0.0, 0.0);
    for (int k = -k_range; k <= k_range; ++k) {
        complex term;
        switch (a) {
            case 1: {
                const double h = k + 0.5;
                term = -std::exp(ipi * tau * h * h + two_ipi * (u + 0.5) * h);
                break;
            }
            case 2: {
                const double h = k + 0.5;
                term = std::exp(ipi * tau * h * h + two_ipi * u * h);
                break;
            }
            case 3: {
                const double h = k;
                term = std::exp(ipi * tau * h * h + two_ipi * u * h);
                break;
            }
            default: {
                const double h = k;
                term = std::exp(ipi * tau * h * h + two_ipi * (u + 0.5) * h);
                break;
            }
        }
        sum += term;
    }
    return sum;
}

/// Term-wise d-th derivative of the same sums.
inline complex theta_deriv_direct(int a, const complex& u, double t, int d) {
    const complex tau(0.0, t);
    const complex ipi(0.0, pi);
    const complex two_ipi(0.0, 2.0 * pi);
    complex sum(0.0, 0.0);
    for (int k = -k_range; k <= k_range; ++k) {
        const double h = (a == 1 || a == 2) ? k + 0.5 : k;
        const complex rate = two_ipi * h;
        complex factor(1.0, 0.0);
        for (int j = 0; j < d; ++j) factor *= rate;
        complex term;
        switch (a) {
            case 1: term = -std::exp(ipi * tau * h * h + two_ipi * (u + 0.5) * h); break;
            case 2: term = std::exp(ipi * tau * h * h + two_ipi * u * h); break;
            case 3: term = std::exp(ipi * tau * h * h + two_ipi * u * h); break;
            default: term = std::exp(ipi * tau * h * h + two_ipi * (u + 0.5) * h); break;
        }
        sum += factor * term;
    }
    return sum;
}

} // namespace oracles

#endif // PFAFFELL_TESTS_ORACLES_HPP
