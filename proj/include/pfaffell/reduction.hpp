#ifndef PFAFFELL_REDUCTION_HPP
#define PFAFFELL_REDUCTION_HPP

#include <cmath>
#include <vector>

#include "pfaffell/errors.hpp"
#include "pfaffell/tau_model.hpp"

namespace pfaffell::hirota {

/// Rewrites an even KP model in the dTC times
///   ttilde_n = 2 t_{2n} (n >= 1),  ttilde_0 = t_0 / 2,
/// so that D(z) F = Dtilde(z^2) Ftilde and dF/dt_0 = (1/2) dFtilde/dttilde_0
/// at corresponding points.
///
/// With check_even set, any dependence on an odd time raises
/// odd_time_dependence_error; otherwise odd-time terms are dropped, which
/// restricts F to the slice t_1 = t_3 = ... = 0.
inline PolynomialTauModel reduction_map(const PolynomialTauModel& model, bool check_even = true) {
    if (model.variant() != Variant::KP) {
        throw variant_mismatch_error("reduction_map applies to KP models");
    }
    if (check_even && model.has_odd_time_dependence()) {
        throw odd_time_dependence_error("model depends on an odd time t_{2k+1}");
    }
    PolynomialTauModel out = PolynomialTauModel::kp(model.max_index() / 2);
    for (const auto& [key, coeff] : model.terms()) {
        const std::vector<int>& te = key.first;
        bool odd = false;
        for (std::size_t k = 1; k < te.size(); k += 2) {
            if (te[k] > 0) odd = true;
        }
        if (odd) continue; // only reachable with check_even = false
        std::vector<int> tilde;
        int scale_pow = 0; // power of 2 in the rewritten coefficient
        for (std::size_t k = 0; k < te.size(); ++k) {
            const int e = te[k];
            if (e == 0) continue;
            if (k == 0) {
                // t_0 = 2 ttilde_0
                if (tilde.size() < 1) tilde.resize(1, 0);
                tilde[0] += e;
                scale_pow += e;
            } else {
                // t_{2n} = ttilde_n / 2
                const std::size_t n = k / 2;
                if (tilde.size() < n + 1) tilde.resize(n + 1, 0);
                tilde[n] += e;
                scale_pow -= e;
            }
        }
        out.add_term(tilde, {}, coeff * std::pow(2.0, scale_pow));
    }
    return out;
}

/// Point map companion of reduction_map: ttilde_0 = t_0/2, ttilde_n = 2 t_{2n}.
inline TimePoint tilde_point(const TimePoint& p, int tilde_max_index) {
    TimePoint out;
    out.t.resize(static_cast<std::size_t>(tilde_max_index) + 1, complex(0.0, 0.0));
    out.t[0] = 0.5 * p.value(t_var(0));
    for (int n = 1; n <= tilde_max_index; ++n) {
        out.t[static_cast<std::size_t>(n)] = 2.0 * p.value(t_var(2 * n));
    }
    return out;
}

} // namespace pfaffell::hirota

#endif // PFAFFELL_REDUCTION_HPP
