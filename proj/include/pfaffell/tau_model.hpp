#ifndef PFAFFELL_TAU_MODEL_HPP
#define PFAFFELL_TAU_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfaffell/errors.hpp"
#include "pfaffell/numerics.hpp"

namespace pfaffell::hirota {

using pfaffell::complex;

enum class Variant { KP, Toda };

/// One time variable: t_k or tbar_k.
struct VarId {
    bool bar = false;
    int k = 0;

    friend bool operator==(const VarId&, const VarId&) = default;
};

inline VarId t_var(int k) { return VarId{false, k}; }
inline VarId tbar_var(int k) { return VarId{true, k}; }

/// Evaluation point: values of t_0..t_M (and tbar_0..tbar_M for Toda).
/// The real form of the Toda hierarchy lives on conjugate-symmetric points
/// tbar_k = conj(t_k), i.e. s = (t_0 + tbar_0)/2 real and r = (t_0 - tbar_0)/2
/// purely imaginary.
struct TimePoint {
    std::vector<complex> t;
    std::vector<complex> tbar;

    complex value(const VarId& v) const {
        const auto& vec = v.bar ? tbar : t;
        if (v.k < 0 || static_cast<std::size_t>(v.k) >= vec.size()) return complex(0.0, 0.0);
        return vec[static_cast<std::size_t>(v.k)];
    }

    complex s() const { return 0.5 * (value(t_var(0)) + value(tbar_var(0))); }
    complex r_time() const { return 0.5 * (value(t_var(0)) - value(tbar_var(0))); }

    bool is_conjugate_symmetric(double tol = 1e-12) const {
        const std::size_t n = std::max(t.size(), tbar.size());
        for (std::size_t k = 0; k < n; ++k) {
            const complex a = k < t.size() ? t[k] : complex(0.0, 0.0);
            const complex b = k < tbar.size() ? tbar[k] : complex(0.0, 0.0);
            if (std::abs(b - std::conj(a)) > tol) return false;
        }
        return true;
    }

    static TimePoint kp(std::vector<complex> times) { return TimePoint{std::move(times), {}}; }

    static TimePoint conj_symmetric(std::vector<complex> times) {
        TimePoint p{std::move(times), {}};
        p.tbar.reserve(p.t.size());
        for (const complex& v : p.t) p.tbar.push_back(std::conj(v));
        return p;
    }
};

/// Exact polynomial model of the dispersionless tau-function F.
///
/// KP models are real polynomials in t_0..t_M. Toda models carry monomials
/// t^alpha tbar^beta with coeff(beta, alpha) = conj(coeff(alpha, beta)), so
/// F is real-valued at conjugate-symmetric points.
class PolynomialTauModel {
public:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    PolynomialTauModel(Variant variant, int max_index)
        : variant_(variant), max_index_(max_index) {
        if (max_index < 0) throw index_out_of_range_error("max time index must be >= 0");
    }

    static PolynomialTauModel kp(int max_index) { return PolynomialTauModel(Variant::KP, max_index); }
    static PolynomialTauModel toda(int max_index) { return PolynomialTauModel(Variant::Toda, max_index); }

    Variant variant() const { return variant_; }
    int max_index() const { return max_index_; }
    const std::map<Key, complex>& terms() const { return terms_; }

    /// Adds coeff * t^t_exp * tbar^tbar_exp (exponents indexed by time).
    void add_term(std::vector<int> t_exp, std::vector<int> tbar_exp, const complex& coeff) {
        check_exponents(t_exp);
        check_exponents(tbar_exp);
        if (variant_ == Variant::KP) {
            if (!tbar_exp.empty()) {
                throw variant_mismatch_error("KP models have no tbar times");
            }
            if (coeff.imag() != 0.0) {
                throw inconsistent_data_error("KP model coefficients must be real", std::abs(coeff.imag()));
            }
        }
        strip_trailing_zeros(t_exp);
        strip_trailing_zeros(tbar_exp);
        if (coeff == complex(0.0, 0.0)) return;
        terms_[Key{std::move(t_exp), std::move(tbar_exp)}] += coeff;
    }

    void add_term(std::vector<int> t_exp, double coeff) {
        add_term(std::move(t_exp), {}, complex(coeff, 0.0));
    }

    /// Adds coeff * t^a tbar^b plus its conjugate partner conj(coeff) * t^b tbar^a,
    /// keeping the model real-valued. A self-paired monomial (a == b) is added
    /// once and must have a real coefficient.
    void add_conj_pair(std::vector<int> t_exp, std::vector<int> tbar_exp, const complex& coeff) {
        if (variant_ != Variant::Toda) {
            throw variant_mismatch_error("add_conj_pair applies to Toda models");
        }
        std::vector<int> a = t_exp, b = tbar_exp;
        strip_trailing_zeros(a);
        strip_trailing_zeros(b);
        if (a == b) {
            if (coeff.imag() != 0.0) {
                throw inconsistent_data_error("self-conjugate monomial needs a real coefficient",
                                              std::abs(coeff.imag()));
            }
            add_term(std::move(t_exp), std::move(tbar_exp), coeff);
            return;
        }
        add_term(t_exp, tbar_exp, coeff);
        add_term(tbar_exp, t_exp, std::conj(coeff));
    }

    /// Largest defect of coeff(beta, alpha) = conj(coeff(alpha, beta)).
    double conjugation_defect() const {
        double worst = 0.0;
        for (const auto& [key, coeff] : terms_) {
            const Key partner{key.second, key.first};
            const auto it = terms_.find(partner);
            const complex other = it == terms_.end() ? complex(0.0, 0.0) : it->second;
            worst = std::max(worst, std::abs(other - std::conj(coeff)));
        }
        return worst;
    }

    void require_real_form(double tol = 1e-12) const {
        if (variant_ != Variant::Toda) return;
        const double defect = conjugation_defect();
        if (defect > tol) {
            throw inconsistent_data_error("Toda model violates conjugation symmetry", defect);
        }
    }

    complex evaluate(const TimePoint& p) const {
        complex acc(0.0, 0.0);
        for (const auto& [key, coeff] : terms_) {
            acc += coeff * monomial_value(key, p);
        }
        return acc;
    }

    /// Exact mixed partial derivative; `derivs` lists variables with
    /// multiplicity (e.g. {t0, t0, t1} for d^3/dt0^2 dt1).
    complex partial(const std::vector<VarId>& derivs, const TimePoint& p) const {
        for (const VarId& v : derivs) {
            if (v.k < 0 || v.k > max_index_) {
                throw index_out_of_range_error("derivative index outside model support");
            }
            if (v.bar && variant_ == Variant::KP) {
                throw variant_mismatch_error("KP models have no tbar derivatives");
            }
        }
        complex acc(0.0, 0.0);
        for (const auto& [key, coeff] : terms_) {
            acc += coeff * monomial_partial(key, derivs, p);
        }
        return acc;
    }

    complex partial2(const VarId& a, const VarId& b, const TimePoint& p) const {
        return partial({a, b}, p);
    }

    bool has_odd_time_dependence() const {
        for (const auto& [key, coeff] : terms_) {
            (void)coeff;
            for (std::size_t k = 1; k < key.first.size(); k += 2) {
                if (key.first[k] > 0) return true;
            }
        }
        return false;
    }

private:
    static void strip_trailing_zeros(std::vector<int>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    void check_exponents(const std::vector<int>& v) const {
        if (static_cast<int>(v.size()) > max_index_ + 1) {
            throw index_out_of_range_error("exponent list exceeds the model's max time index");
        }
        for (int e : v) {
            if (e < 0) throw index_out_of_range_error("negative exponent");
        }
    }

    static complex pow_int(const complex& x, int e) {
        complex acc(1.0, 0.0);
        for (int i = 0; i < e; ++i) acc *= x;
        return acc;
    }

    static complex monomial_value(const Key& key, const TimePoint& p) {
        complex acc(1.0, 0.0);
        for (std::size_t k = 0; k < key.first.size(); ++k) {
            acc *= pow_int(p.value(t_var(static_cast<int>(k))), key.first[k]);
        }
        for (std::size_t k = 0; k < key.second.size(); ++k) {
            acc *= pow_int(p.value(tbar_var(static_cast<int>(k))), key.second[k]);
        }
        return acc;
    }

    static complex monomial_partial(const Key& key, const std::vector<VarId>& derivs,
                                    const TimePoint& p) {
        // count derivative multiplicity per variable
        std::vector<int> dt(key.first.size(), 0), dtb(key.second.size(), 0);
        for (const VarId& v : derivs) {
            auto& exps = v.bar ? key.second : key.first;
            auto& counts = v.bar ? dtb : dt;
            if (static_cast<std::size_t>(v.k) >= exps.size()) return complex(0.0, 0.0);
            counts[static_cast<std::size_t>(v.k)] += 1;
        }
        complex acc(1.0, 0.0);
        for (std::size_t k = 0; k < key.first.size(); ++k) {
            const int e = key.first[k], d = dt[k];
            if (d > e) return complex(0.0, 0.0);
            double fall = 1.0;
            for (int j = 0; j < d; ++j) fall *= (e - j);
            acc *= fall * pow_int(p.value(t_var(static_cast<int>(k))), e - d);
        }
        for (std::size_t k = 0; k < key.second.size(); ++k) {
            const int e = key.second[k], d = dtb[k];
            if (d > e) return complex(0.0, 0.0);
            double fall = 1.0;
            for (int j = 0; j < d; ++j) fall *= (e - j);
            acc *= fall * pow_int(p.value(tbar_var(static_cast<int>(k))), e - d);
        }
        return acc;
    }

    Variant variant_;
    int max_index_;
    std::map<Key, complex> terms_;
};

} // namespace pfaffell::hirota

#endif // PFAFFELL_TAU_MODEL_HPP
