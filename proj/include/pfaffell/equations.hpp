#ifndef PFAFFELL_EQUATIONS_HPP
#define PFAFFELL_EQUATIONS_HPP

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "pfaffell/errors.hpp"
#include "pfaffell/numerics.hpp"
#include "pfaffell/operators.hpp"
#include "pfaffell/tau_model.hpp"
#include "pfaffell/theta.hpp"

namespace pfaffell::hirota {

/// Every equation of the registry. The *A forms are the compact rewrites in
/// terms of the auxiliary curve functions; T2_* are the compact Toda forms;
/// DTC3_1_ALT carries z^2 prefactors in the numerator where DTC3_1 keeps the
/// printed z (the two variants of the reduced first equation).
enum class EquationId {
    D1, D2, D1A, D2A, SIMP1A, SIMP1B,
    PFT1, PFT1A, PFT2, PFT2A, PFT3, PFT4,
    T2_1, T2_2, T2_3, T2_4, SIMP2A, SIMP2B,
    DKP, DMKP, DTODA_1, DTODA_2,
    DTC_1, DTC_2, DTC1_1, DTC1_2, DTC2, DTC3_1, DTC3_1_ALT, DTC3_2,
    DMKP_DET3, DMKP_DET4, THREE_TERM,
};

inline const std::vector<std::pair<EquationId, std::string>>& equation_id_names() {
    static const std::vector<std::pair<EquationId, std::string>> table = {
        {EquationId::D1, "D1"}, {EquationId::D2, "D2"}, {EquationId::D1A, "D1A"},
        {EquationId::D2A, "D2A"}, {EquationId::SIMP1A, "SIMP1A"}, {EquationId::SIMP1B, "SIMP1B"},
        {EquationId::PFT1, "PFT1"}, {EquationId::PFT1A, "PFT1A"}, {EquationId::PFT2, "PFT2"},
        {EquationId::PFT2A, "PFT2A"}, {EquationId::PFT3, "PFT3"}, {EquationId::PFT4, "PFT4"},
        {EquationId::T2_1, "T2_1"}, {EquationId::T2_2, "T2_2"}, {EquationId::T2_3, "T2_3"},
        {EquationId::T2_4, "T2_4"}, {EquationId::SIMP2A, "SIMP2A"}, {EquationId::SIMP2B, "SIMP2B"},
        {EquationId::DKP, "DKP"}, {EquationId::DMKP, "DMKP"}, {EquationId::DTODA_1, "DTODA_1"},
        {EquationId::DTODA_2, "DTODA_2"}, {EquationId::DTC_1, "DTC_1"}, {EquationId::DTC_2, "DTC_2"},
        {EquationId::DTC1_1, "DTC1_1"}, {EquationId::DTC1_2, "DTC1_2"}, {EquationId::DTC2, "DTC2"},
        {EquationId::DTC3_1, "DTC3_1"}, {EquationId::DTC3_1_ALT, "DTC3_1_ALT"},
        {EquationId::DTC3_2, "DTC3_2"}, {EquationId::DMKP_DET3, "DMKP_DET3"},
        {EquationId::DMKP_DET4, "DMKP_DET4"}, {EquationId::THREE_TERM, "THREE_TERM"},
    };
    return table;
}

inline std::string to_string(EquationId id) {
    for (const auto& [e, name] : equation_id_names()) {
        if (e == id) return name;
    }
    return "?";
}

inline EquationId equation_from_string(const std::string& name) {
    for (const auto& [e, n] : equation_id_names()) {
        if (n == name) return e;
    }
    throw domain_error("unknown equation id: " + name);
}

/// Spectral arguments. For the two-point equations these are (z, zeta) and,
/// on the barred side, (zbar, zetabar). The determinant and three-term
/// relations read them positionally as (z1, z2, z3, z4) = (z, zeta, zbar,
/// zetabar).
struct EqArgs {
    complex z{};
    complex zeta{};
    complex zbar{};
    complex zetabar{};
};

/// Structured record of one equation evaluation.
struct ResidualReport {
    EquationId eq{};
    TimePoint point{};
    EqArgs args{};
    complex lhs{};
    complex rhs{};
    double abs_res = 0.0;
    double rel_res = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
};

inline bool equation_needs_toda(EquationId id) {
    switch (id) {
        case EquationId::PFT1: case EquationId::PFT1A: case EquationId::PFT2:
        case EquationId::PFT2A: case EquationId::PFT3: case EquationId::PFT4:
        case EquationId::T2_1: case EquationId::T2_2: case EquationId::T2_3:
        case EquationId::T2_4: case EquationId::SIMP2A: case EquationId::SIMP2B:
        case EquationId::DTODA_1: case EquationId::DTODA_2:
            return true;
        default:
            return false;
    }
}

namespace detail {

using pfaffell::hirota::detail::pd2_relaxed;

struct EqContext {
    const PolynomialTauModel& model;
    const TimePoint& point;
    int m;

    complex dd(const LinOp& a, const LinOp& b) const { return apply2(model, a, b, point); }
    complex f2(const VarId& a, const VarId& b) const { return pd2_relaxed(model, a, b, point); }
    LinOp D(const complex& z) const { return d_op(z, m); }
    LinOp Db(const complex& z) const { return dbar_op(z, m); }
    LinOp Nab(const complex& z) const { return nabla_op(z, m); }
    LinOp Nabb(const complex& z) const { return nablabar_op(z, m); }
};

inline void require_distinct(const complex& a, const complex& b, const char* what) {
    if (a == b) throw singular_args_error(what);
}

// Auxiliary curve functions of the algebraic formulations.
inline complex w_kp(const EqContext& c, const complex& z) {
    return z * z * std::exp(-2.0 * c.dd(dt_op(0), c.Nab(z)));
}
inline complex p_kp(const EqContext& c, const complex& z) {
    return z - c.dd(dt_op(1), c.Nab(z));
}
inline complex P_toda(const EqContext& c, const complex& z) {
    return z * std::exp(-c.dd(dt_op(0) + dtbar_op(0), c.Nab(z)));
}
inline complex W_toda(const EqContext& c, const complex& z) {
    return z * std::exp(-c.dd(dt_op(0) - dtbar_op(0), c.Nab(z)));
}
inline complex Pbar_toda(const EqContext& c, const complex& zb) {
    return zb * std::exp(-c.dd(dt_op(0) + dtbar_op(0), c.Nabb(zb)));
}
inline complex Wbar_toda(const EqContext& c, const complex& zb) {
    return zb * std::exp(c.dd(dt_op(0) - dtbar_op(0), c.Nabb(zb)));
}

inline complex omega_dtc(const EqContext& c, const complex& z) {
    return z * std::exp(-0.5 * c.f2(t_var(0), t_var(0)) - c.dd(dt_op(0), c.D(z)));
}

// 3x3 determinant with rows (1, x_i, e_i), expanded along the last column.
inline complex det3_unit_x_e(const std::array<complex, 3>& x, const std::array<complex, 3>& e) {
    return e[0] * (x[2] - x[1]) - e[1] * (x[2] - x[0]) + e[2] * (x[1] - x[0]);
}

// Vandermonde 3x3 of (a, b, c): prod of pairwise differences.
inline complex vandermonde3(const complex& a, const complex& b, const complex& c) {
    return (b - a) * (c - a) * (c - b);
}

// 4x4 determinant with rows (1, x_i, x_i^2, e_i), expanded along the last column.
inline complex det4_vandermonde_e(const std::array<complex, 4>& x, const std::array<complex, 4>& e,
                                  double* scale_out = nullptr) {
    const std::array<complex, 4> minors = {
        vandermonde3(x[1], x[2], x[3]),
        vandermonde3(x[0], x[2], x[3]),
        vandermonde3(x[0], x[1], x[3]),
        vandermonde3(x[0], x[1], x[2]),
    };
    complex det(0.0, 0.0);
    double scale = 0.0;
    for (int i = 0; i < 4; ++i) {
        const complex term = e[static_cast<std::size_t>(i)] * minors[static_cast<std::size_t>(i)];
        det += (i % 2 == 0 ? -1.0 : 1.0) * term;
        scale = std::max(scale, std::abs(term));
    }
    if (scale_out) *scale_out = scale;
    return det;
}

} // namespace detail

/// omega(z) = z e^{-F00/2 - d/dt0 D(z) F}, the dTC curve variable.
inline complex dtc_omega(const PolynomialTauModel& model, const complex& z, const TimePoint& point) {
    detail::EqContext c{model, point, model.max_index()};
    return detail::omega_dtc(c, z);
}

/// Evaluates the named equation literally, its two sides computed exactly
/// from the polynomial model. Difference quotients keep their displayed
/// form; coincident spectral arguments raise singular_args_error rather
/// than taking limits.
inline ResidualReport eval_equation(EquationId eq, const PolynomialTauModel& model,
                                    const TimePoint& point, const EqArgs& args,
                                    const Tolerance& tol = {}, std::uint64_t seed = 0) {
    const bool needs_toda = equation_needs_toda(eq);
    if (needs_toda && model.variant() != Variant::Toda) {
        throw variant_mismatch_error(to_string(eq) + " needs a Toda-variant model");
    }
    if (!needs_toda && model.variant() != Variant::KP) {
        throw variant_mismatch_error(to_string(eq) + " needs a KP-variant model");
    }

    detail::EqContext c{model, point, model.max_index()};
    const complex z = args.z, zt = args.zeta, zb = args.zbar, ztb = args.zetabar;
    const LinOp t0 = dt_op(0), t1 = dt_op(1), tb0 = dtbar_op(0);
    const LinOp ds = ds_op(), dr = dr_op();
    complex lhs, rhs;

    switch (eq) {
        case EquationId::D1: {
            detail::require_distinct(z, zt, "D1: z = zeta");
            lhs = std::exp(c.dd(c.D(z), c.D(zt))) *
                  (1.0 - 1.0 / (z * z * zt * zt) *
                             std::exp(2.0 * c.dd(t0, 2.0 * t0 + c.D(z) + c.D(zt))));
            rhs = 1.0 - (c.dd(t1, c.D(z)) - c.dd(t1, c.D(zt))) / (z - zt);
            break;
        }
        case EquationId::D2: {
            detail::require_distinct(z, zt, "D2: z = zeta");
            lhs = std::exp(-c.dd(c.D(z), c.D(zt))) *
                  (z * z * std::exp(-2.0 * c.dd(t0, c.D(z))) -
                   zt * zt * std::exp(-2.0 * c.dd(t0, c.D(zt)))) /
                  (z - zt);
            rhs = z + zt - c.dd(t1, 2.0 * t0 + c.D(z) + c.D(zt));
            break;
        }
        case EquationId::D1A: {
            detail::require_distinct(z, zt, "D1A: z = zeta");
            lhs = std::exp(c.dd(c.D(z), c.D(zt))) *
                  (1.0 - 1.0 / (detail::w_kp(c, z) * detail::w_kp(c, zt)));
            rhs = (detail::p_kp(c, z) - detail::p_kp(c, zt)) / (z - zt);
            break;
        }
        case EquationId::D2A: {
            detail::require_distinct(z, zt, "D2A: z = zeta");
            lhs = std::exp(-c.dd(c.D(z), c.D(zt)) + 2.0 * c.f2(t_var(0), t_var(0))) *
                  (detail::w_kp(c, z) - detail::w_kp(c, zt)) / (z - zt);
            rhs = detail::p_kp(c, z) + detail::p_kp(c, zt);
            break;
        }
        case EquationId::SIMP1A: {
            const complex f11 = c.f2(t_var(1), t_var(1));
            lhs = 6.0 * f11 * f11 + 3.0 * c.f2(t_var(2), t_var(2)) - 4.0 * c.f2(t_var(1), t_var(3));
            rhs = 12.0 * std::exp(4.0 * c.f2(t_var(0), t_var(0)));
            break;
        }
        case EquationId::SIMP1B: {
            const complex f01 = c.f2(t_var(0), t_var(1));
            lhs = 2.0 * c.f2(t_var(0), t_var(3)) + 4.0 * f01 * f01 * f01 +
                  6.0 * f01 * c.f2(t_var(1), t_var(1)) - 6.0 * f01 * c.f2(t_var(0), t_var(2));
            rhs = 3.0 * c.f2(t_var(1), t_var(2));
            break;
        }
        case EquationId::PFT1: {
            detail::require_distinct(z, zt, "PFT1: z = zeta");
            lhs = std::exp(c.dd(c.D(z), c.D(zt))) *
                  (1.0 - 1.0 / (z * zt) * std::exp(c.dd(ds, ds + dr + c.D(z) + c.D(zt))));
            rhs = (z * std::exp(-c.dd(dr, c.D(z))) - zt * std::exp(-c.dd(dr, c.D(zt)))) / (z - zt);
            break;
        }
        case EquationId::PFT1A: {
            detail::require_distinct(zb, ztb, "PFT1A: zbar = zetabar");
            lhs = std::exp(c.dd(c.Db(zb), c.Db(ztb))) *
                  (1.0 - 1.0 / (zb * ztb) * std::exp(c.dd(ds, ds - dr + c.Db(zb) + c.Db(ztb))));
            rhs = (zb * std::exp(c.dd(dr, c.Db(zb))) - ztb * std::exp(c.dd(dr, c.Db(ztb)))) /
                  (zb - ztb);
            break;
        }
        case EquationId::PFT2: {
            detail::require_distinct(z, zt, "PFT2: z = zeta");
            lhs = std::exp(c.dd(c.D(z), c.D(zt))) *
                  (1.0 - 1.0 / (z * zt) * std::exp(c.dd(dr, ds + dr + c.D(z) + c.D(zt))));
            rhs = (z * std::exp(-c.dd(ds, c.D(z))) - zt * std::exp(-c.dd(ds, c.D(zt)))) / (z - zt);
            break;
        }
        case EquationId::PFT2A: {
            detail::require_distinct(zb, ztb, "PFT2A: zbar = zetabar");
            lhs = std::exp(c.dd(c.Db(zb), c.Db(ztb))) *
                  (1.0 - 1.0 / (zb * ztb) * std::exp(-c.dd(dr, ds - dr + c.Db(zb) + c.Db(ztb))));
            rhs = (zb * std::exp(-c.dd(ds, c.Db(zb))) - ztb * std::exp(-c.dd(ds, c.Db(ztb)))) /
                  (zb - ztb);
            break;
        }
        case EquationId::PFT3: {
            lhs = std::exp(-c.dd(c.D(z), c.Db(ztb))) *
                  (1.0 - 1.0 / (z * ztb) * std::exp(c.dd(dr, dr + c.D(z) - c.Db(ztb))));
            rhs = 1.0 - 1.0 / (z * ztb) * std::exp(c.dd(ds, ds + c.D(z) + c.Db(ztb)));
            break;
        }
        case EquationId::PFT4: {
            lhs = std::exp(-c.dd(ds + dr + c.D(z), c.Db(ztb))) - 1.0;
            rhs = (z / ztb) * std::exp(-c.dd(dr, ds + c.D(z) + c.Db(ztb))) *
                  (std::exp(-c.dd(ds - dr + c.Db(ztb), c.D(z))) - 1.0);
            break;
        }
        case EquationId::T2_1: {
            detail::require_distinct(z, zt, "T2_1: z = zeta");
            lhs = std::exp(c.dd(c.D(z), c.D(zt))) *
                  (1.0 - 1.0 / (detail::P_toda(c, z) * detail::P_toda(c, zt)));
            rhs = (detail::W_toda(c, z) - detail::W_toda(c, zt)) / (z - zt) *
                  std::exp(c.dd(dt_op(0) - dtbar_op(0), t0));
            break;
        }
        case EquationId::T2_2: {
            detail::require_distinct(z, zt, "T2_2: z = zeta");
            lhs = std::exp(c.dd(c.D(z), c.D(zt))) *
                  (1.0 - 1.0 / (detail::W_toda(c, z) * detail::W_toda(c, zt)));
            rhs = (detail::P_toda(c, z) - detail::P_toda(c, zt)) / (z - zt) *
                  std::exp(c.dd(dt_op(0) + dtbar_op(0), t0));
            break;
        }
        case EquationId::T2_3: {
            lhs = std::exp(c.dd(c.D(z), c.Db(ztb))) *
                  (1.0 - 1.0 / (detail::P_toda(c, z) * detail::Pbar_toda(c, ztb)));
            rhs = 1.0 - 1.0 / (detail::W_toda(c, z) * detail::Wbar_toda(c, ztb));
            break;
        }
        case EquationId::T2_4: {
            lhs = std::exp(c.dd(c.D(z), c.Db(ztb))) *
                  (detail::W_toda(c, z) - detail::Wbar_toda(c, ztb));
            rhs = (detail::P_toda(c, z) - detail::Pbar_toda(c, ztb)) *
                  std::exp(2.0 * c.f2(t_var(0), tbar_var(0)));
            break;
        }
        case EquationId::SIMP2A: {
            lhs = std::exp(c.f2(t_var(0), t_var(0))) * c.f2(t_var(0), tbar_var(1));
            rhs = std::exp(c.f2(tbar_var(0), tbar_var(0))) * c.f2(tbar_var(0), t_var(1));
            break;
        }
        case EquationId::SIMP2B: {
            lhs = c.f2(t_var(1), tbar_var(1));
            rhs = 2.0 *
                  std::exp(c.f2(t_var(0), t_var(0)) + c.f2(tbar_var(0), tbar_var(0))) *
                  std::sinh(2.0 * c.f2(t_var(0), tbar_var(0)));
            break;
        }
        case EquationId::DKP: {
            detail::require_distinct(z, zt, "DKP: z = zeta");
            lhs = std::exp(c.dd(c.D(z), c.D(zt)));
            rhs = 1.0 - (c.dd(t1, c.D(z)) - c.dd(t1, c.D(zt))) / (z - zt);
            break;
        }
        case EquationId::DMKP:
        case EquationId::DTODA_1:
        case EquationId::DTC_1: {
            detail::require_distinct(z, zt, "z = zeta");
            lhs = std::exp(c.dd(c.D(z), c.D(zt)));
            rhs = (z * std::exp(-c.dd(t0, c.D(z))) - zt * std::exp(-c.dd(t0, c.D(zt)))) / (z - zt);
            break;
        }
        case EquationId::DTODA_2: {
            lhs = std::exp(-c.dd(c.D(z), c.Db(ztb)));
            rhs = 1.0 - 1.0 / (z * ztb) * std::exp(c.dd(t0, t0 + c.D(z) + c.Db(ztb)));
            break;
        }
        case EquationId::DTC_2: {
            lhs = std::exp(-c.dd(c.D(z), c.D(zt)));
            rhs = 1.0 - 1.0 / (z * zt) * std::exp(c.dd(t0, t0 + c.D(z) + c.D(zt)));
            break;
        }
        case EquationId::DTC1_1: {
            detail::require_distinct(z, zt, "DTC1_1: z = zeta");
            lhs = std::exp(-0.5 * c.f2(t_var(0), t_var(0)) + c.dd(c.D(z), c.D(zt)));
            rhs = (detail::omega_dtc(c, z) - detail::omega_dtc(c, zt)) / (z - zt);
            break;
        }
        case EquationId::DTC1_2: {
            lhs = std::exp(-c.dd(c.D(z), c.D(zt)));
            rhs = 1.0 - 1.0 / (detail::omega_dtc(c, z) * detail::omega_dtc(c, zt));
            break;
        }
        case EquationId::DTC2: {
            const complex om = detail::omega_dtc(c, z);
            lhs = z;
            rhs = std::exp(0.5 * c.f2(t_var(0), t_var(0))) * (om + 1.0 / om) +
                  c.f2(t_var(0), t_var(1));
            break;
        }
        case EquationId::DTC3_1:
        case EquationId::DTC3_1_ALT: {
            const complex z2 = z * z, zt2 = zt * zt;
            detail::require_distinct(z2, zt2, "DTC3: z^2 = zeta^2");
            lhs = std::exp(c.dd(c.D(z2), c.D(zt2)));
            const complex num_z = (eq == EquationId::DTC3_1 ? z : z2);
            const complex num_zt = (eq == EquationId::DTC3_1 ? zt : zt2);
            rhs = (num_z * std::exp(-c.dd(t0, c.D(z2))) - num_zt * std::exp(-c.dd(t0, c.D(zt2)))) /
                  (z2 - zt2);
            break;
        }
        case EquationId::DTC3_2: {
            const complex z2 = z * z, zt2 = zt * zt;
            lhs = std::exp(-c.dd(c.D(z2), c.D(zt2)));
            rhs = 1.0 - 1.0 / (z2 * zt2) * std::exp(c.dd(t0, t0 + c.D(z2) + c.D(zt2)));
            break;
        }
        case EquationId::DMKP_DET3: {
            const std::array<complex, 3> zs = {z, zt, zb};
            const std::array<complex, 3> x = {1.0 / z, 1.0 / zt, 1.0 / zb};
            (void)zs;
            const std::array<complex, 3> e = {
                std::exp(c.dd(c.Nab(zt), c.Nab(zb))),
                std::exp(c.dd(c.Nab(z), c.Nab(zb))),
                std::exp(c.dd(c.Nab(z), c.Nab(zt))),
            };
            lhs = detail::det3_unit_x_e(x, e);
            rhs = complex(0.0, 0.0);
            break;
        }
        case EquationId::DMKP_DET4: {
            const std::array<complex, 4> zs = {z, zt, zb, ztb};
            std::array<complex, 4> x{};
            for (int i = 0; i < 4; ++i) x[static_cast<std::size_t>(i)] = 1.0 / zs[static_cast<std::size_t>(i)];
            const LinOp n1 = c.Nab(zs[0]), n2 = c.Nab(zs[1]), n3 = c.Nab(zs[2]), n4 = c.Nab(zs[3]);
            const std::array<complex, 4> e = {
                std::exp(c.dd(n2, n3) + c.dd(n3, n4) + c.dd(n4, n2)),
                std::exp(c.dd(n1, n3) + c.dd(n3, n4) + c.dd(n4, n1)),
                std::exp(c.dd(n1, n2) + c.dd(n2, n4) + c.dd(n4, n1)),
                std::exp(c.dd(n1, n2) + c.dd(n2, n3) + c.dd(n3, n1)),
            };
            lhs = detail::det4_vandermonde_e(x, e);
            rhs = complex(0.0, 0.0);
            break;
        }
        case EquationId::THREE_TERM: {
            detail::require_distinct(z, zt, "THREE_TERM: z1 = z2");
            detail::require_distinct(zt, zb, "THREE_TERM: z2 = z3");
            detail::require_distinct(z, zb, "THREE_TERM: z1 = z3");
            lhs = (z - zt) * std::exp(c.dd(c.D(z), c.D(zt))) +
                  (zt - zb) * std::exp(c.dd(c.D(zt), c.D(zb))) +
                  (zb - z) * std::exp(c.dd(c.D(z), c.D(zb)));
            rhs = complex(0.0, 0.0);
            break;
        }
    }

    ResidualReport rep;
    rep.eq = eq;
    rep.point = point;
    rep.args = args;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.abs_res = std::abs(lhs - rhs);
    rep.rel_res = rel_residual(lhs, rhs);
    rep.pass = rep.rel_res < tol.rel_tol;
    rep.seed = seed;
    return rep;
}

/// Absolute residual of z12 e^{D1 D2 F} + z23 e^{D2 D3 F} + z31 e^{D1 D3 F} = 0.
inline double three_term_check(const PolynomialTauModel& model,
                               const std::array<complex, 3>& z, const TimePoint& point) {
    EqArgs args;
    args.z = z[0];
    args.zeta = z[1];
    args.zbar = z[2];
    return eval_equation(EquationId::THREE_TERM, model, point, args).abs_res;
}

/// Raw 4x4 determinant with rows (1, 1/z_i, 1/z_i^2, E_i), the exponential
/// column built from the theta-ratio correspondence
/// e^{nabla_j nabla_k F} = [theta_1(u_jk)/theta_4(u_jk)] / (1/z_j - 1/z_k).
inline complex e99_determinant(const std::array<complex, 4>& z, const std::array<complex, 4>& u,
                               const ModularParam& tau, double* scale_out = nullptr) {
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (z[static_cast<std::size_t>(i)] == z[static_cast<std::size_t>(j)]) {
                if (u[static_cast<std::size_t>(i)] == u[static_cast<std::size_t>(j)]) {
                    // identical rows
                    if (scale_out) *scale_out = 1.0;
                    return complex(0.0, 0.0);
                }
                throw singular_args_error("e99_determinant: coincident z arguments");
            }
        }
    }
    std::array<complex, 4> x{};
    for (int i = 0; i < 4; ++i) x[static_cast<std::size_t>(i)] = 1.0 / z[static_cast<std::size_t>(i)];
    const auto quot = [&](int j, int k) {
        const complex ujk = u[static_cast<std::size_t>(j)] - u[static_cast<std::size_t>(k)];
        return theta(1, ujk, tau) / theta(4, ujk, tau) /
               (x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(k)]);
    };
    const std::array<complex, 4> e = {
        quot(1, 2) * quot(2, 3) * quot(3, 1),
        quot(0, 2) * quot(2, 3) * quot(3, 0),
        quot(0, 1) * quot(1, 3) * quot(3, 0),
        quot(0, 1) * quot(1, 2) * quot(2, 0),
    };
    return detail::det4_vandermonde_e(x, e, scale_out);
}

/// Relative magnitude of the (E99)-form determinant on theta data: |det|
/// normalized by the largest cofactor term of its last-column expansion.
inline double det_check_e99(const std::array<complex, 4>& z, const std::array<complex, 4>& u,
                            const ModularParam& tau) {
    double scale = 0.0;
    const complex det = e99_determinant(z, u, tau, &scale);
    return std::abs(det) / std::max(1.0, scale);
}

} // namespace pfaffell::hirota

#endif // PFAFFELL_EQUATIONS_HPP
