#ifndef PFAFFELL_EXTRACT_HPP
#define PFAFFELL_EXTRACT_HPP

#include <cmath>
#include <vector>

#include "pfaffell/curve_solver.hpp"
#include "pfaffell/elliptic.hpp"
#include "pfaffell/errors.hpp"
#include "pfaffell/operators.hpp"
#include "pfaffell/series.hpp"
#include "pfaffell/tau_model.hpp"

namespace pfaffell::hirota {

/// Series of d/dt0 nabla(z) F at the point: F00 + sum_k z^{-k}/k F_{0k}.
inline TruncatedSeries t0_nabla_series(const PolynomialTauModel& model, const TimePoint& point,
                                       int order) {
    std::vector<complex> coeffs;
    coeffs.push_back(detail::pd2_relaxed(model, t_var(0), t_var(0), point));
    for (int k = 1; k <= order; ++k) {
        coeffs.push_back(detail::pd2_relaxed(model, t_var(0), t_var(k), point) /
                         static_cast<double>(k));
    }
    return TruncatedSeries(0, order, std::move(coeffs));
}

/// Solves z theta_1(u(z))/theta_4(u(z)) = e^{d/dt0 nabla(z) F} for the
/// expansion u(z) = c_1/z + ... + c_N/z^N, order by order. Each c_k enters
/// linearly at its order with pivot pi theta_2(0) theta_3(0), so the solve
/// is a forward substitution. c_1 reproduces curve.c1 = gamma/pi.
inline TruncatedSeries extract_u_series(const PolynomialTauModel& model, const TimePoint& point,
                                        const KPCurveData& curve, int n) {
    if (n < 1 || n > 8) {
        throw unsupported_order_error("extract_u_series: order must be between 1 and 8");
    }
    const ThetaConstants tc = theta_constants(curve.tau);
    const double pivot = pi * tc.th2 * tc.th3;
    if (std::abs(pivot) < 1e-300) {
        throw pivot_failure_error("extract_u_series: theta_2(0) theta_3(0) underflowed");
    }
    const TruncatedSeries rhs = exp(t0_nabla_series(model, point, n));
    std::vector<complex> c(static_cast<std::size_t>(n), complex(0.0, 0.0));
    for (int j = 0; j < n; ++j) {
        // z * T(u) with c_1..c_j known and c_{j+1} still zero: the defect of
        // the x^j coefficient is T1 * c_{j+1}
        const TruncatedSeries u_partial(1, n, c);
        const TruncatedSeries lhs = theta_ratio_of_series(u_partial, curve.tau, n).shifted(-1);
        c[static_cast<std::size_t>(j)] = (rhs.coeff(j) - lhs.coeff(j)) / pivot;
    }
    return TruncatedSeries(1, n, std::move(c));
}

/// Largest coefficient defect of z T(u(z)) = e^{d/dt0 nabla(z) F} over the
/// solved window x^0..x^{N-1}, relative to the scale of the right side.
inline double e6_series_residual(const PolynomialTauModel& model, const TimePoint& point,
                                 const KPCurveData& curve, const TruncatedSeries& u) {
    const int n = u.order();
    const TruncatedSeries rhs = exp(t0_nabla_series(model, point, n));
    const TruncatedSeries lhs = theta_ratio_of_series(u, curve.tau, n).shifted(-1);
    double worst = 0.0;
    double scale = 1.0;
    for (int j = 0; j < n; ++j) {
        scale = std::max(scale, std::abs(rhs.coeff(j)));
    }
    for (int j = 0; j < n; ++j) {
        worst = std::max(worst, std::abs(lhs.coeff(j) - rhs.coeff(j)));
    }
    return worst / scale;
}

/// Diagnostic evaluation of the boxed two-point relation on an extracted u:
///   (1/z1 - 1/z2) e^{nabla(z1) nabla(z2) F}  vs  T(u(z1) - u(z2)).
/// The value records how far the model is from solving the hierarchy; no
/// pass verdict is implied.
struct E4Diagnostic {
    complex lhs;
    complex rhs;
    double rel_res;
};

inline E4Diagnostic e4_diagnostic(const PolynomialTauModel& model, const TimePoint& point,
                                  const KPCurveData& curve, const TruncatedSeries& u,
                                  const complex& z1, const complex& z2) {
    if (z1 == z2) throw singular_args_error("e4_diagnostic: z1 = z2");
    const complex u1 = u.evaluate(z1);
    const complex u2 = u.evaluate(z2);
    E4Diagnostic d{};
    d.lhs = (1.0 / z1 - 1.0 / z2) *
            std::exp(apply2(model, nabla_op(z1, model.max_index()),
                            nabla_op(z2, model.max_index()), point));
    d.rhs = theta(1, u1 - u2, curve.tau) / theta(4, u1 - u2, curve.tau);
    d.rel_res = rel_residual(d.lhs, d.rhs);
    return d;
}

} // namespace pfaffell::hirota

#endif // PFAFFELL_EXTRACT_HPP
