#ifndef PFAFFELL_IDENTITIES_HPP
#define PFAFFELL_IDENTITIES_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pfaffell/elliptic.hpp"
#include "pfaffell/errors.hpp"
#include "pfaffell/numerics.hpp"
#include "pfaffell/theta.hpp"

namespace pfaffell {

/// One evaluated identity instance on concrete sampled data.
struct IdentityReport {
    std::string identity;
    double t = 0.0;  // tau = i t of the grid point
    int sample = 0;
    complex lhs{};
    complex rhs{};
    double abs_res = 0.0;
    double rel_res = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
};

struct SuiteConfig {
    std::vector<double> tau_grid{1.0, 1.5, 2.0};
    int samples = 100;
    std::uint64_t seed = 0;
    std::optional<double> tol_override{};
    int threads = 1;
};

namespace detail {

inline int env_thread_cap() {
    if (const char* s = std::getenv("PFAFF_ELL_THREADS")) {
        const int n = std::atoi(s);
        if (n >= 1) return n;
    }
    return 0; // unset
}

/// Index-sharded parallel loop. Each index owns its output slot and derives
/// its own RNG stream, so any thread count yields identical results.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    const int cap = env_thread_cap();
    int nt = threads >= 1 ? threads : 1;
    if (cap > 0) nt = std::min(nt, cap);
    nt = std::min<std::size_t>(nt, n) > 0 ? static_cast<int>(std::min<std::size_t>(nt, n)) : 1;
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int w = 0; w < nt; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = static_cast<std::size_t>(w); i < n; i += static_cast<std::size_t>(nt)) {
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

inline constexpr double sample_delta = 1e-3;

inline complex draw_cell_point(CounterRng& rng, const ModularParam& tau) {
    const double x = rng.uniform(sample_delta, 1.0 - sample_delta);
    const double y = rng.uniform(sample_delta * tau.t, (1.0 - sample_delta) * tau.t);
    return complex(x, y);
}

/// Draws a cell point whose derived arguments (given by `ok`) are all clear
/// of the theta_1/theta_4 zero lattices. Deterministic: rejected draws just
/// advance the same counter stream.
template <typename Ok>
complex draw_valid(CounterRng& rng, const ModularParam& tau, Ok&& ok) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        const complex u = draw_cell_point(rng, tau);
        if (ok(u)) return u;
    }
    throw evaluation_failure("identity sampling: rejection loop failed to find a valid point");
}

} // namespace detail

/// Names of the identities covered by identity_suite, in canonical order.
inline const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {
        "bp1a_shift", "diffs", "e13_p", "e13_w", "e222", "e8",
        "kp_quotient", "sprime_fd", "theta1prime", "toda_quotient_w", "toda_quotient_wbar",
    };
    return names;
}

/// Default pass threshold for each identity (relative residual).
inline double identity_default_tol(const std::string& name) {
    if (name == "theta1prime" || name == "bp1a_shift") return 1e-12;
    if (name == "e222" || name == "diffs") return 1e-10;
    if (name == "e13_w" || name == "e13_p") return 1e-11;
    if (name == "sprime_fd") return 1e-6;
    if (name == "theta_parity" || name == "theta_zero") return 1e-12;
    if (name == "kp_curve_d5" || name == "toda_curve_t6") return 1e-10;
    return 1e-9; // quotient identities and e8
}

namespace detail {

inline void finish_entry(IdentityReport& e, const complex& lhs, const complex& rhs,
                         const std::optional<double>& tol_override) {
    e.lhs = lhs;
    e.rhs = rhs;
    e.abs_res = std::abs(lhs - rhs);
    e.rel_res = rel_residual(lhs, rhs);
    e.tol = tol_override ? *tol_override : identity_default_tol(e.identity);
    e.pass = e.rel_res < e.tol;
}

inline void worst_of(IdentityReport& e, complex lhs, complex rhs, complex& wl, complex& wr,
                     double& worst) {
    const double r = rel_residual(lhs, rhs);
    if (r >= worst) {
        worst = r;
        wl = lhs;
        wr = rhs;
    }
}

inline IdentityReport eval_identity_entry(const std::string& name, const ModularParam& tau,
                                          double grid_t, int sample, const SuiteConfig& cfg) {
    IdentityReport e;
    e.identity = name;
    e.t = grid_t;
    e.sample = sample;
    e.seed = cfg.seed;
    const std::size_t id_idx =
        std::find(identity_names().begin(), identity_names().end(), name) - identity_names().begin();
    CounterRng rng(cfg.seed, stream_id(id_idx, static_cast<std::uint64_t>(grid_t * 4096.0),
                                       static_cast<std::uint64_t>(sample)));
    const ThetaConstants c = theta_constants(tau);
    const double delta = sample_delta;
    const auto T = [&](const complex& x) { return theta_ratio(x, tau); };

    if (name == "theta1prime") {
        finish_entry(e, complex(c.th1_prime, 0.0), complex(pi * c.th2 * c.th3 * c.th4, 0.0),
                     cfg.tol_override);
        return e;
    }
    if (name == "bp1a_shift") {
        const complex u = draw_cell_point(rng, tau);
        complex wl, wr;
        double worst = -1.0;
        for (int a = 1; a <= 4; ++a) {
            const auto q = quasi_periodicity_residual(a, u, tau);
            worst_of(e, q.lhs_1, q.rhs_1, wl, wr, worst);
            worst_of(e, q.lhs_tau, q.rhs_tau, wl, wr, worst);
        }
        finish_entry(e, wl, wr, cfg.tol_override);
        return e;
    }
    if (name == "e222") {
        const complex u = draw_valid(rng, tau, [&](const complex& x) { return off_zeros(x, tau, delta); });
        const complex t1 = theta(1, u, tau), t2 = theta(2, u, tau);
        const complex t3 = theta(3, u, tau), t4 = theta(4, u, tau);
        const complex lhs = std::pow(c.th4, 4) * t2 * t2 * t3 * t3 / (t1 * t1 * t4 * t4);
        const complex rhs = c.th2 * c.th2 * c.th3 * c.th3 * ((t4 * t4) / (t1 * t1) + (t1 * t1) / (t4 * t4)) -
                            (std::pow(c.th2, 4) + std::pow(c.th3, 4));
        finish_entry(e, lhs, rhs, cfg.tol_override);
        return e;
    }
    if (name == "diffs") {
        const complex u = draw_valid(rng, tau, [&](const complex& x) { return off_zeros(x, tau, delta); });
        const UniformPoint pt(u, delta * 0.5);
        const complex s = S(pt, tau);
        const complex sp = S_prime(pt, tau);
        const double lam = (c.th2 * c.th2) / (c.th3 * c.th3);
        const complex lhs = std::pow(sp / (pi * c.th2 * c.th3), 2);
        const complex rhs = 2.0 * std::cosh(2.0 * s) - lam - 1.0 / lam;
        finish_entry(e, lhs, rhs, cfg.tol_override);
        return e;
    }
    if (name == "sprime_fd") {
        const complex u = draw_valid(rng, tau, [&](const complex& x) { return off_zeros(x, tau, delta); });
        const complex sp = S_prime(UniformPoint(u, delta * 0.5), tau);
        const double h = fd_step(u);
        complex d = S(UniformPoint(u + h, delta * 0.25), tau) - S(UniformPoint(u - h, delta * 0.25), tau);
        // the principal branch can jump by 2 pi i inside the stencil
        d -= complex(0.0, 2.0 * pi * std::round(d.imag() / (2.0 * pi)));
        finish_entry(e, sp, d / (2.0 * h), cfg.tol_override);
        return e;
    }
    if (name == "e13_w" || name == "e13_p") {
        const double gamma = rng.uniform(0.5, 2.0);
        const KPCurveData curve = kp_curve_from(tau, gamma);
        const complex u = draw_valid(rng, tau, [&](const complex& x) { return off_zeros(x, tau, delta); });
        const UniformPoint pt(u, delta * 0.5);
        const auto [w, p] = wp_pair(pt, curve);
        if (name == "e13_w") {
            finish_entry(e, w * std::exp(2.0 * S(pt, tau)), complex(1.0, 0.0), cfg.tol_override);
        } else {
            finish_entry(e, p, curve.c1 * S_prime(pt, tau), cfg.tol_override);
        }
        return e;
    }
    if (name == "kp_quotient") {
        const double gamma = rng.uniform(0.5, 2.0);
        const KPCurveData curve = kp_curve_from(tau, gamma);
        const complex u1 = draw_valid(rng, tau, [&](const complex& x) { return off_zeros(x, tau, delta); });
        const complex u2 = draw_valid(rng, tau, [&](const complex& x) {
            return off_zeros(x, tau, delta) && off_zeros(u1 - x, tau, delta) &&
                   lattice_distance(u1 + x, complex(0.0, 0.0), tau) > delta;
        });
        const UniformPoint p1(u1, delta * 0.5), p2(u2, delta * 0.5);
        const auto [w1, pp1] = wp_pair(p1, curve);
        const auto [w2, pp2] = wp_pair(p2, curve);
        const complex lhs = (w1 - w2) / (pp1 + pp2);
        const complex rhs = -(1.0 / (gamma * c.th2 * c.th3)) * theta(4, u1, tau) * theta(4, u2, tau) /
                            (theta(1, u1, tau) * theta(1, u2, tau)) * T(u1 - u2);
        finish_entry(e, lhs, rhs, cfg.tol_override);
        return e;
    }
    if (name == "toda_quotient_w" || name == "toda_quotient_wbar") {
        const double eta = rng.uniform(0.05, 0.45);
        const auto point_ok = [&](const complex& x) {
            return off_zeros(x, tau, delta) && off_zeros(x + eta, tau, delta);
        };
        const complex u1 = draw_valid(rng, tau, point_ok);
        const auto P_of = [&](const complex& x) { return 1.0 / (T(x) * T(x + eta)); };
        const auto W_of = [&](const complex& x) { return T(x + eta) / T(x); };
        if (name == "toda_quotient_w") {
            const complex u2 = draw_valid(rng, tau, [&](const complex& x) {
                if (!point_ok(x) || !off_zeros(u1 - x, tau, delta)) return false;
                const complex den = 1.0 - P_of(u1) * P_of(x);
                return std::abs(den) > 1e-4;
            });
            const complex lhs = (W_of(u1) - W_of(u2)) / (1.0 - P_of(u1) * P_of(u2));
            const complex rhs = T(complex(eta, 0.0)) * T(u1 + eta) * T(u2 + eta) * T(u1 - u2);
            finish_entry(e, lhs, rhs, cfg.tol_override);
        } else {
            // v plays the conjugate series value u-bar(z_2)
            const complex v = draw_valid(rng, tau, [&](const complex& x) {
                if (!point_ok(x) || !off_zeros(u1 + x + eta, tau, delta)) return false;
                const complex den = 1.0 - P_of(u1) * P_of(x);
                return std::abs(den) > 1e-4;
            });
            const complex lhs = (1.0 - W_of(u1) * W_of(v)) / (1.0 - P_of(u1) * P_of(v));
            const complex rhs = T(complex(eta, 0.0)) * T(u1 + eta) * T(v + eta) * T(u1 + v + eta);
            finish_entry(e, lhs, rhs, cfg.tol_override);
        }
        return e;
    }
    if (name == "e8") {
        std::vector<complex> u;
        for (int i = 0; i < 4; ++i) {
            u.push_back(draw_valid(rng, tau, [&](const complex& x) {
                for (const complex& prev : u) {
                    if (!off_zeros(x - prev, tau, delta)) return false;
                }
                return off_zeros(x, tau, delta);
            }));
        }
        const complex t123 = T(u[0] - u[1]) * T(u[1] - u[2]) * T(u[2] - u[0]);
        const complex t124 = T(u[0] - u[1]) * T(u[1] - u[3]) * T(u[3] - u[0]);
        const complex t134 = T(u[0] - u[2]) * T(u[2] - u[3]) * T(u[3] - u[0]);
        const complex t234 = T(u[1] - u[2]) * T(u[2] - u[3]) * T(u[3] - u[1]);
        finish_entry(e, t123 + t134, t124 + t234, cfg.tol_override);
        return e;
    }
    throw domain_error("unknown identity name: " + name);
}

} // namespace detail

/// Evaluates every covered identity on seeded random data over the tau grid.
/// One report entry per (identity, tau, sample); failures are entries with
/// pass = false, never exceptions. Same config, same report.
inline std::vector<IdentityReport> identity_suite(const SuiteConfig& cfg) {
    const auto& names = identity_names();
    const std::size_t per_tau = names.size() * static_cast<std::size_t>(std::max(cfg.samples, 0));
    const std::size_t total = per_tau * cfg.tau_grid.size();
    std::vector<IdentityReport> out(total);
    detail::parallel_for(total, cfg.threads, [&](std::size_t idx) {
        const std::size_t g = idx / per_tau;
        const std::size_t rem = idx % per_tau;
        const std::size_t id_idx = rem / static_cast<std::size_t>(cfg.samples);
        const int sample = static_cast<int>(rem % static_cast<std::size_t>(cfg.samples));
        const ModularParam tau(cfg.tau_grid[g]);
        out[idx] = detail::eval_identity_entry(names[id_idx], tau, cfg.tau_grid[g], sample, cfg);
    });
    return out;
}

/// Parity and lattice-zero checks of the theta engine, as suite entries.
inline std::vector<IdentityReport> theta_check_suite(const SuiteConfig& cfg) {
    std::vector<IdentityReport> out;
    const int samples = std::max(cfg.samples, 0);
    out.reserve(cfg.tau_grid.size() * (samples + 1));
    for (std::size_t g = 0; g < cfg.tau_grid.size(); ++g) {
        const ModularParam tau(cfg.tau_grid[g]);
        for (int s = 0; s < samples; ++s) {
            IdentityReport e;
            e.identity = "theta_parity";
            e.t = cfg.tau_grid[g];
            e.sample = s;
            e.seed = cfg.seed;
            CounterRng rng(cfg.seed, stream_id(101, static_cast<std::uint64_t>(cfg.tau_grid[g] * 4096.0),
                                               static_cast<std::uint64_t>(s)));
            const complex u = detail::draw_cell_point(rng, tau);
            complex wl, wr;
            double worst = -1.0;
            for (int a = 1; a <= 4; ++a) {
                const complex lhs = theta(a, -u, tau);
                const complex rhs = (a == 1 ? -1.0 : 1.0) * theta(a, u, tau);
                detail::worst_of(e, lhs, rhs, wl, wr, worst);
            }
            detail::finish_entry(e, wl, wr, cfg.tol_override);
            out.push_back(e);
        }
        IdentityReport z;
        z.identity = "theta_zero";
        z.t = cfg.tau_grid[g];
        z.sample = 0;
        z.seed = cfg.seed;
        complex wl, wr;
        double worst = -1.0;
        for (int a = 1; a <= 4; ++a) {
            const complex lhs = theta(a, half_period(a - 1, tau), tau);
            detail::worst_of(z, lhs, complex(0.0, 0.0), wl, wr, worst);
        }
        detail::finish_entry(z, wl, wr, cfg.tol_override);
        out.push_back(z);
    }
    return out;
}

/// Curve-equation residual sweeps: (D5) through wp_pair and (T6) through
/// fg_pair on seeded random data.
inline std::vector<IdentityReport> curve_residual_suite(const SuiteConfig& cfg) {
    const int samples = std::max(cfg.samples, 0);
    const std::size_t total = cfg.tau_grid.size() * static_cast<std::size_t>(samples) * 2;
    std::vector<IdentityReport> out(total);
    detail::parallel_for(total, cfg.threads, [&](std::size_t idx) {
        const std::size_t g = idx / (static_cast<std::size_t>(samples) * 2);
        const std::size_t rem = idx % (static_cast<std::size_t>(samples) * 2);
        const bool kp = rem % 2 == 0;
        const int sample = static_cast<int>(rem / 2);
        const ModularParam tau(cfg.tau_grid[g]);
        IdentityReport e;
        e.identity = kp ? "kp_curve_d5" : "toda_curve_t6";
        e.t = cfg.tau_grid[g];
        e.sample = sample;
        e.seed = cfg.seed;
        CounterRng rng(cfg.seed, stream_id(kp ? 201 : 202,
                                           static_cast<std::uint64_t>(cfg.tau_grid[g] * 4096.0),
                                           static_cast<std::uint64_t>(sample)));
        const double delta = detail::sample_delta;
        if (kp) {
            const double gamma = rng.uniform(0.5, 2.0);
            const KPCurveData curve = kp_curve_from(tau, gamma);
            const complex u =
                detail::draw_valid(rng, tau, [&](const complex& x) { return off_zeros(x, tau, delta); });
            const UniformPoint pt(u, delta * 0.5);
            const auto [w, p] = wp_pair(pt, curve);
            const complex lhs = p * p;
            const complex rhs = curve.curve_r * curve.curve_r * (w + 1.0 / w) - curve.v;
            detail::finish_entry(e, lhs, rhs, cfg.tol_override);
        } else {
            const double eta = rng.uniform(0.05, 0.45);
            const TodaCurveData curve = toda_curve_from(tau, eta);
            const complex u = detail::draw_valid(rng, tau, [&](const complex& x) {
                return off_zeros(x, tau, delta) && off_zeros(x + eta, tau, delta);
            });
            const UniformPoint pt(u, delta * 0.5);
            const auto [f, g2] = fg_pair(pt, curve);
            const complex lhs = curve.R * curve.R * (f * f * g2 * g2 + 1.0) + curve.C * f * g2;
            const complex rhs = f * f + g2 * g2;
            detail::finish_entry(e, lhs, rhs, cfg.tol_override);
        }
        out[idx] = e;
    });
    return out;
}

} // namespace pfaffell

#endif // PFAFFELL_IDENTITIES_HPP
