#ifndef PFAFFELL_OPERATORS_HPP
#define PFAFFELL_OPERATORS_HPP

#include <utility>
#include <vector>

#include "pfaffell/errors.hpp"
#include "pfaffell/numerics.hpp"
#include "pfaffell/tau_model.hpp"

namespace pfaffell::hirota {

/// First-order operator: a finite linear combination of time derivatives
/// with complex (z-dependent) weights. D(z), Dbar, nabla, d/ds, d/dr and all
/// their sums and scalar multiples live here.
struct LinOp {
    std::vector<std::pair<VarId, complex>> w;

    friend LinOp operator+(LinOp a, const LinOp& b) {
        a.w.insert(a.w.end(), b.w.begin(), b.w.end());
        return a;
    }

    friend LinOp operator-(LinOp a, const LinOp& b) {
        for (const auto& [v, c] : b.w) a.w.emplace_back(v, -c);
        return a;
    }

    friend LinOp operator*(const complex& s, LinOp a) {
        for (auto& [v, c] : a.w) c *= s;
        return a;
    }
};

inline LinOp dt_op(int k) { return LinOp{{{t_var(k), complex(1.0, 0.0)}}}; }
inline LinOp dtbar_op(int k) { return LinOp{{{tbar_var(k), complex(1.0, 0.0)}}}; }

/// D(z) = sum_{k=1..M} z^{-k}/k d/dt_k; exact on a model of max index M.
inline LinOp d_op(const complex& z, int max_index) {
    LinOp op;
    complex zk(1.0, 0.0);
    for (int k = 1; k <= max_index; ++k) {
        zk /= z;
        op.w.emplace_back(t_var(k), zk / static_cast<double>(k));
    }
    return op;
}

inline LinOp dbar_op(const complex& zbar, int max_index) {
    LinOp op;
    complex zk(1.0, 0.0);
    for (int k = 1; k <= max_index; ++k) {
        zk /= zbar;
        op.w.emplace_back(tbar_var(k), zk / static_cast<double>(k));
    }
    return op;
}

inline LinOp nabla_op(const complex& z, int max_index) { return dt_op(0) + d_op(z, max_index); }

inline LinOp nablabar_op(const complex& zbar, int max_index) {
    return dtbar_op(0) + dbar_op(zbar, max_index);
}

/// d/ds and d/dr in terms of t_0 = s + r, tbar_0 = s - r.
inline LinOp ds_op() { return dt_op(0) + dtbar_op(0); }
inline LinOp dr_op() { return dt_op(0) - dtbar_op(0); }

namespace detail {

/// Second derivative that treats indices beyond the model's support as a
/// structural zero (the polynomial does not depend on those times).
inline complex pd2_relaxed(const PolynomialTauModel& model, const VarId& a, const VarId& b,
                           const TimePoint& p) {
    if (a.k > model.max_index() || b.k > model.max_index()) return complex(0.0, 0.0);
    return model.partial({a, b}, p);
}

inline complex pd1_relaxed(const PolynomialTauModel& model, const VarId& a, const TimePoint& p) {
    if (a.k > model.max_index()) return complex(0.0, 0.0);
    return model.partial({a}, p);
}

} // namespace detail

/// (L F)(point).
inline complex apply1(const PolynomialTauModel& model, const LinOp& op, const TimePoint& p) {
    complex acc(0.0, 0.0);
    for (const auto& [v, c] : op.w) {
        if (c == complex(0.0, 0.0)) continue;
        acc += c * detail::pd1_relaxed(model, v, p);
    }
    return acc;
}

/// (L1 L2 F)(point); the operators commute, both orders agree.
inline complex apply2(const PolynomialTauModel& model, const LinOp& a, const LinOp& b,
                      const TimePoint& p) {
    complex acc(0.0, 0.0);
    for (const auto& [va, ca] : a.w) {
        if (ca == complex(0.0, 0.0)) continue;
        for (const auto& [vb, cb] : b.w) {
            if (cb == complex(0.0, 0.0)) continue;
            acc += ca * cb * detail::pd2_relaxed(model, va, vb, p);
        }
    }
    return acc;
}

enum class DopFlavor { D, Dbar, Nabla, Nablabar };

/// Value of the chosen operator applied after the extra derivatives in
/// `target_derivs`: e.g. dop(m, D, z, {t0}, p) = D(z) dF/dt0 at p.
/// The k-sum truncates at the model's max index, so there is no truncation
/// error by construction.
inline complex dop(const PolynomialTauModel& model, DopFlavor flavor, const complex& z,
                   const std::vector<VarId>& target_derivs, const TimePoint& p) {
    for (const VarId& v : target_derivs) {
        if (v.k < 0 || v.k > model.max_index()) {
            throw index_out_of_range_error("dop: target derivative index outside model support");
        }
    }
    LinOp op;
    switch (flavor) {
        case DopFlavor::D: op = d_op(z, model.max_index()); break;
        case DopFlavor::Dbar: op = dbar_op(z, model.max_index()); break;
        case DopFlavor::Nabla: op = nabla_op(z, model.max_index()); break;
        case DopFlavor::Nablabar: op = nablabar_op(z, model.max_index()); break;
    }
    complex acc(0.0, 0.0);
    for (const auto& [v, c] : op.w) {
        std::vector<VarId> derivs = target_derivs;
        derivs.push_back(v);
        acc += c * model.partial(derivs, p);
    }
    return acc;
}

} // namespace pfaffell::hirota

#endif // PFAFFELL_OPERATORS_HPP
