#ifndef PFAFFELL_CURVE_SOLVER_HPP
#define PFAFFELL_CURVE_SOLVER_HPP

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "pfaffell/elliptic.hpp"
#include "pfaffell/errors.hpp"
#include "pfaffell/numerics.hpp"
#include "pfaffell/theta.hpp"

namespace pfaffell {

/// Second derivatives of F feeding the KP curve coefficients:
/// curve_r = e^{F00}, v = 2 F11 + F01^2 - F02.
struct FSecondDerivsKP {
    double F00 = 0.0;
    double F01 = 0.0;
    double F02 = 0.0;
    double F11 = 0.0;
    std::optional<double> F13{};
    std::optional<double> F22{};
};

/// Second derivatives of F feeding the Toda curve coefficients:
/// R^2 = e^{2 F00b}, C = 2 e^{F00b - F00} F0b1. Real-form data, so
/// F0b1 = F01b and F0b0b = F00 for a real tau-function.
struct FSecondDerivsToda {
    double F00 = 0.0;
    double F0b0b = 0.0;
    double F00b = 0.0;
    double F0b1 = 0.0;
    double F01b = 0.0;
};

namespace detail {

inline double lambda_of_t(double t) {
    const ThetaConstants c = theta_constants(ModularParam(t));
    return (c.th2 * c.th2) / (c.th3 * c.th3);
}

inline double m_of_t(double t) {
    const double lam = lambda_of_t(t);
    return lam + 1.0 / lam;
}

inline constexpr double solver_t_min = 1.0;
inline constexpr double solver_t_max = 50.0;
inline constexpr double m_threshold_slack = 1e-8;

} // namespace detail

/// Minimum of v/r^2 = lambda + 1/lambda on the solver domain, attained at
/// tau = i. Computed from theta constants rather than hard-coded 3/sqrt(2),
/// so it is self-consistent with the engine's truncation.
inline double kp_m_min() {
    static const double m = detail::m_of_t(detail::solver_t_min);
    return m;
}

inline double kp_m_max() {
    static const double m = detail::m_of_t(detail::solver_t_max);
    return m;
}

namespace detail {

/// Solves lambda(t) + 1/lambda(t) = m for t in [1, 50]. The target is
/// rewritten as log lambda(t) = log lambda*, which is nearly linear in t.
inline double solve_t_from_m(double m) {
    const double m_min = kp_m_min();
    if (m < m_min - m_threshold_slack) {
        std::ostringstream os;
        os << "curve modulus v/r^2 = " << m << " below the attainable minimum " << m_min
           << " (tau = i)";
        throw domain_error(os.str());
    }
    if (m <= m_min) return solver_t_min;
    const double m_max = kp_m_max();
    if (m > m_max) {
        std::ostringstream os;
        os << "curve modulus v/r^2 = " << m << " above the attainable range [" << m_min << ", "
           << m_max << "] for t in [1, 50]";
        throw domain_error(os.str());
    }
    // stable root of lambda + 1/lambda = m with lambda <= 1
    const double lambda_target = 2.0 / (m + std::sqrt(m * m - 4.0));
    const double log_target = std::log(lambda_target);
    Tolerance tol;
    tol.abs_tol = 1e-12;
    return find_root_monotone([&](double t) { return std::log(lambda_of_t(t)) - log_target; },
                              Bracket{solver_t_min, solver_t_max}, tol);
}

} // namespace detail

/// Inverts (r, v) -> (tau, gamma, c1) for the dPfaff-KP curve.
inline KPCurveData solve_tau_kp(double curve_r, double v) {
    if (!(curve_r > 0.0)) {
        throw domain_error("solve_tau_kp: curve_r must be positive");
    }
    const double m = v / (curve_r * curve_r);
    const double t = detail::solve_t_from_m(m);
    const ModularParam tau(t);
    const ThetaConstants c = theta_constants(tau);
    const double gamma = curve_r / (c.th2 * c.th3);
    KPCurveData data{curve_r, v, gamma, gamma / pi, tau};
    // forward re-evaluation must reproduce the inputs
    const KPCurveData fwd = kp_curve_from(tau, gamma);
    Tolerance tol;
    if (rel_residual(fwd.curve_r, curve_r) > tol.rel_tol ||
        (m > kp_m_min() && rel_residual(fwd.v, v) > tol.rel_tol)) {
        throw inconsistent_data_error("solve_tau_kp: forward map failed to reproduce (r, v)",
                                      rel_residual(fwd.v, v));
    }
    return data;
}

/// Result of the Toda curve inversion; c_residual records how well the
/// recomputed C matched the input.
struct TodaSolveResult {
    TodaCurveData data;
    double c_residual;
};

/// Inverts (R, C) -> (tau, eta) for the dPfaff-Toda curve. Requires the
/// real-eta regime R < 1 and C > 0; the recomputed C must match the input
/// to 1e-6 relative or the data are rejected as inconsistent.
inline TodaSolveResult solve_tau_toda(double R, double C) {
    if (!(R > 0.0)) throw domain_error("solve_tau_toda: R must be positive");
    if (R >= 1.0) {
        throw domain_error("solve_tau_toda: R >= 1 has no real eta (S < 0 on the real axis)");
    }
    if (!(C > 0.0)) throw domain_error("solve_tau_toda: C must be positive");
    const double m = R * R + (1.0 - 0.25 * C * C) / (R * R);
    const double t = detail::solve_t_from_m(m);
    const ModularParam tau(t);
    const double log_r = std::log(R);
    const double delta = 1e-6;
    Tolerance tol;
    tol.abs_tol = 1e-13;
    double eta;
    try {
        eta = find_root_monotone(
            [&](double x) {
                return std::log(theta(1, complex(x, 0.0), tau).real() /
                                theta(4, complex(x, 0.0), tau).real()) -
                       log_r;
            },
            Bracket{delta, 0.5 - delta}, tol);
    } catch (const no_sign_change_error&) {
        throw domain_error("solve_tau_toda: R outside the attainable range e^{S((0,1/2))} at the solved tau");
    }
    const TodaCurveData data = toda_curve_from(tau, eta);
    const double c_res = rel_residual(data.C, C);
    if (c_res > 1e-6) {
        throw inconsistent_data_error("solve_tau_toda: recomputed C deviates from input", c_res);
    }
    return TodaSolveResult{data, c_res};
}

/// Curve data from second derivatives of F per the KP coefficient formulas.
inline KPCurveData uniformization_from_F(const FSecondDerivsKP& d) {
    const double r = std::exp(d.F00);
    const double v = 2.0 * d.F11 + d.F01 * d.F01 - d.F02;
    return solve_tau_kp(r, v);
}

/// Toda curve data plus c1 extracted from second derivatives of F.
struct TodaFromFResult {
    TodaCurveData data;
    double c1;
    double c_residual;
    double f00_residual;  // defect of e^{F00} = pi c1 theta_2(0) theta_3(0)
};

inline TodaFromFResult toda_data_from_F(const FSecondDerivsToda& d) {
    const double R = std::exp(d.F00b);
    const double C = 2.0 * std::exp(d.F00b - d.F00) * d.F0b1;
    if (d.F0b1 == 0.0) {
        throw inconsistent_data_error(
            "toda_data_from_F: F0b1 = 0 forces c1 = 0, contradicting e^{F00} > 0", 1.0);
    }
    const TodaSolveResult solved = solve_tau_toda(R, C);
    const double sp = S_prime(UniformPoint(complex(solved.data.eta, 0.0), 1e-7), solved.data.tau).real();
    const double c1 = d.F0b1 / sp;
    const ThetaConstants c = theta_constants(solved.data.tau);
    const double f00_res = rel_residual(std::exp(d.F00), pi * c1 * c.th2 * c.th3);
    if (f00_res > 1e-6) {
        throw inconsistent_data_error("toda_data_from_F: e^{F00} = pi c1 theta_2 theta_3 violated",
                                      f00_res);
    }
    return TodaFromFResult{solved.data, c1, solved.c_residual, f00_res};
}

} // namespace pfaffell

#endif // PFAFFELL_CURVE_SOLVER_HPP
