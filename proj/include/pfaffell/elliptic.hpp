#ifndef PFAFFELL_ELLIPTIC_HPP
#define PFAFFELL_ELLIPTIC_HPP

#include <cmath>
#include <complex>
#include <utility>

#include "pfaffell/errors.hpp"
#include "pfaffell/numerics.hpp"
#include "pfaffell/theta.hpp"

namespace pfaffell {

/// Point in the uniformizing variable u, with an exclusion radius around the
/// lattice zeros of theta_1 and theta_4 so that w, p, f, g and S stay finite.
struct UniformPoint {
    complex u;
    double exclusion_radius = 1e-3;

    UniformPoint(complex u_in, double delta = 1e-3) : u(u_in), exclusion_radius(delta) {} // NOLINT
};

/// Throws pole_or_zero_error if u is within delta of a zero of theta_1
/// (lattice at 0) or theta_4 (lattice at tau/2).
inline void require_off_zeros(const complex& u, const ModularParam& tau, double delta) {
    if (lattice_distance(u, complex(0.0, 0.0), tau) <= delta) {
        throw pole_or_zero_error("argument within exclusion radius of a theta_1 zero");
    }
    if (lattice_distance(u, half_period(3, tau), tau) <= delta) {
        throw pole_or_zero_error("argument within exclusion radius of a theta_4 zero");
    }
}

inline bool off_zeros(const complex& u, const ModularParam& tau, double delta) {
    return lattice_distance(u, complex(0.0, 0.0), tau) > delta &&
           lattice_distance(u, half_period(3, tau), tau) > delta;
}

/// S(u|tau) = log(theta_1(u)/theta_4(u)), principal branch.
///
/// S(u+1) = S(u) + i pi and S(u+tau) = S(u); branch-sensitive checks should
/// go through e^S, e^{2S} or cosh 2S rather than the raw logarithm.
inline complex S(const UniformPoint& p, const ModularParam& tau) {
    require_off_zeros(p.u, tau, p.exclusion_radius);
    return std::log(theta(1, p.u, tau) / theta(4, p.u, tau));
}

/// Theta-ratio e^{S(u)} = theta_1(u)/theta_4(u); branch-free companion of S.
inline complex theta_ratio(const complex& u, const ModularParam& tau) {
    return theta(1, u, tau) / theta(4, u, tau);
}

/// S'(u) = pi theta_4^2(0) theta_2(u) theta_3(u) / (theta_1(u) theta_4(u)).
inline complex S_prime(const UniformPoint& p, const ModularParam& tau) {
    require_off_zeros(p.u, tau, p.exclusion_radius);
    const ThetaConstants c = theta_constants(tau);
    return pi * c.th4 * c.th4 * theta(2, p.u, tau) * theta(3, p.u, tau) /
           (theta(1, p.u, tau) * theta(4, p.u, tau));
}

/// Coefficients of the dPfaff-KP spectral curve p^2 = r^2 (w + 1/w) - v.
/// The paper's curve constant r is named curve_r here; it is distinct from
/// the Toda time variable r.
struct KPCurveData {
    double curve_r;
    double v;
    double gamma;
    double c1;
    ModularParam tau;
};

/// Forward map: (tau, gamma) -> curve coefficients
/// r = gamma theta_2(0) theta_3(0), v = gamma^2 (theta_2^4(0) + theta_3^4(0)).
inline KPCurveData kp_curve_from(const ModularParam& tau, double gamma) {
    const ThetaConstants c = theta_constants(tau);
    KPCurveData d{0.0, 0.0, gamma, gamma / pi, tau};
    d.curve_r = gamma * c.th2 * c.th3;
    const double t2_4 = std::pow(c.th2, 4);
    const double t3_4 = std::pow(c.th3, 4);
    d.v = gamma * gamma * (t2_4 + t3_4);
    return d;
}

/// Uniformization of the KP curve:
///   w = theta_4^2(u)/theta_1^2(u),
///   p = gamma theta_4^2(0) theta_2(u) theta_3(u) / (theta_1(u) theta_4(u)),
/// equivalently w = e^{-2S(u)} and p = c1 S'(u).
inline std::pair<complex, complex> wp_pair(const UniformPoint& pt, const KPCurveData& data) {
    require_off_zeros(pt.u, data.tau, pt.exclusion_radius);
    const complex t1 = theta(1, pt.u, data.tau);
    const complex t4 = theta(4, pt.u, data.tau);
    const ThetaConstants c = theta_constants(data.tau);
    const complex w = (t4 * t4) / (t1 * t1);
    const complex p = data.gamma * c.th4 * c.th4 * theta(2, pt.u, data.tau) *
                      theta(3, pt.u, data.tau) / (t1 * t4);
    return {w, p};
}

/// Relative residual of the curve equation p^2 = r^2 (w + 1/w) - v at u.
inline double kp_curve_residual(const UniformPoint& pt, const KPCurveData& data) {
    const auto [w, p] = wp_pair(pt, data);
    const complex lhs = p * p;
    const complex rhs = data.curve_r * data.curve_r * (w + 1.0 / w) - data.v;
    return rel_residual(lhs, rhs);
}

/// Coefficients of the dPfaff-Toda spectral curve
///   R^2 (f^2 g^2 + 1) + C f g = f^2 + g^2, with real eta in (0, 1/2).
struct TodaCurveData {
    double R;
    double C;
    double eta;
    ModularParam tau;
};

/// Forward map: (tau, eta) -> curve coefficients
///   R = theta_1(eta)/theta_4(eta),
///   C = 2 theta_4^2(0) theta_2(eta) theta_3(eta) / (theta_4^2(eta) theta_2(0) theta_3(0)).
inline TodaCurveData toda_curve_from(const ModularParam& tau, double eta) {
    if (!(eta > 0.0 && eta < 0.5)) {
        throw domain_error("toda_curve_from: eta must lie in (0, 1/2)");
    }
    const ThetaConstants c = theta_constants(tau);
    const complex ec(eta, 0.0);
    const double t1 = theta(1, ec, tau).real();
    const double t2 = theta(2, ec, tau).real();
    const double t3 = theta(3, ec, tau).real();
    const double t4 = theta(4, ec, tau).real();
    TodaCurveData d{t1 / t4, 2.0 * c.th4 * c.th4 * t2 * t3 / (t4 * t4 * c.th2 * c.th3), eta, tau};
    return d;
}

/// Uniformization of the Toda curve:
///   f = theta_4(u)/theta_1(u), g = theta_4(u+eta)/theta_1(u+eta).
inline std::pair<complex, complex> fg_pair(const UniformPoint& pt, const TodaCurveData& data) {
    require_off_zeros(pt.u, data.tau, pt.exclusion_radius);
    require_off_zeros(pt.u + data.eta, data.tau, pt.exclusion_radius);
    const complex f = theta(4, pt.u, data.tau) / theta(1, pt.u, data.tau);
    const complex g = theta(4, pt.u + data.eta, data.tau) / theta(1, pt.u + data.eta, data.tau);
    return {f, g};
}

/// Relative residual of R^2 (f^2 g^2 + 1) + C f g = f^2 + g^2 at u.
inline double toda_curve_residual(const UniformPoint& pt, const TodaCurveData& data) {
    const auto [f, g] = fg_pair(pt, data);
    const complex lhs = data.R * data.R * (f * f * g * g + 1.0) + data.C * f * g;
    const complex rhs = f * f + g * g;
    return rel_residual(lhs, rhs);
}

} // namespace pfaffell

#endif // PFAFFELL_ELLIPTIC_HPP
