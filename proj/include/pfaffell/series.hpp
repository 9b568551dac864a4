#ifndef PFAFFELL_SERIES_HPP
#define PFAFFELL_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "pfaffell/errors.hpp"
#include "pfaffell/numerics.hpp"
#include "pfaffell/theta.hpp"

namespace pfaffell {

/// Truncated expansion in x = 1/z with complex coefficients, exact through
/// degree `order`. min_deg >= -1 admits one linear-in-z head term (the p(z)
/// and w(z) expansions around infinity carry such heads).
class TruncatedSeries {
public:
    TruncatedSeries(int min_deg, int order, std::vector<complex> coeffs)
        : min_deg_(min_deg), order_(order), c_(std::move(coeffs)) {
        if (min_deg_ < -1) {
            throw order_mismatch_error("TruncatedSeries: min_deg must be >= -1");
        }
        if (order_ < min_deg_) {
            throw order_mismatch_error("TruncatedSeries: order must be >= min_deg");
        }
        c_.resize(static_cast<std::size_t>(order_ - min_deg_) + 1, complex(0.0, 0.0));
    }

    static TruncatedSeries zero(int order) { return TruncatedSeries(0, order, {}); }

    static TruncatedSeries constant(const complex& value, int order) {
        return TruncatedSeries(0, order, {value});
    }

    /// Single term value * z^{-deg}.
    static TruncatedSeries single(int deg, const complex& value, int order) {
        std::vector<complex> c(1, value);
        return TruncatedSeries(deg, order, std::move(c));
    }

    int min_deg() const { return min_deg_; }
    int order() const { return order_; }

    /// Coefficient of z^{-deg}; zero outside the stored window.
    complex coeff(int deg) const {
        if (deg < min_deg_ || deg > order_) return complex(0.0, 0.0);
        return c_[static_cast<std::size_t>(deg - min_deg_)];
    }

    /// Degree of the first nonzero coefficient, or order()+1 when all vanish.
    int leading_degree() const {
        for (int d = min_deg_; d <= order_; ++d) {
            if (coeff(d) != complex(0.0, 0.0)) return d;
        }
        return order_ + 1;
    }

    bool is_zero() const { return leading_degree() > order_; }

    /// Pointwise value sum c_k z^{-k}; truncation error O(z^{-(order+1)}).
    complex evaluate(const complex& z) const {
        const complex x = 1.0 / z;
        complex acc(0.0, 0.0);
        for (int d = order_; d >= min_deg_; --d) {
            acc = acc * x + coeff(d);
        }
        // undo the lowest power: acc currently holds sum c_d x^{d - min_deg}
        return acc * std::pow(x, min_deg_);
    }

    TruncatedSeries truncated(int new_order) const {
        std::vector<complex> c;
        const int top = std::min(order_, new_order);
        for (int d = min_deg_; d <= top; ++d) c.push_back(coeff(d));
        return TruncatedSeries(std::min(min_deg_, new_order), new_order, std::move(c));
    }

    /// Multiplication by z^{-k} (k may be negative; min_deg shifts by k).
    TruncatedSeries shifted(int k) const {
        return TruncatedSeries(min_deg_ + k, order_ + k, c_);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int m = std::min(a.min_deg_, b.min_deg_);
        const int n = std::min(a.order_, b.order_);
        std::vector<complex> c;
        for (int d = m; d <= n; ++d) c.push_back(a.coeff(d) + b.coeff(d));
        return TruncatedSeries(m, n, std::move(c));
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-1.0) * b;
    }

    friend TruncatedSeries operator*(const complex& s, const TruncatedSeries& a) {
        std::vector<complex> c(a.c_);
        for (auto& v : c) v *= s;
        return TruncatedSeries(a.min_deg_, a.order_, std::move(c));
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const complex& s) { return s * a; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        // A head term z^{+1} reduces the trustworthy order of the partner.
        const int n = std::min({a.order_ + std::min(b.min_deg_, 0), b.order_ + std::min(a.min_deg_, 0),
                                a.order_, b.order_});
        const int m = a.min_deg_ + b.min_deg_;
        if (m < -1) {
            throw order_mismatch_error("series product would carry a z^2 head");
        }
        std::vector<complex> c(static_cast<std::size_t>(n - m) + 1, complex(0.0, 0.0));
        for (int i = a.min_deg_; i <= a.order_; ++i) {
            const complex ai = a.coeff(i);
            if (ai == complex(0.0, 0.0)) continue;
            for (int j = b.min_deg_; j <= b.order_ && i + j <= n; ++j) {
                c[static_cast<std::size_t>(i + j - m)] += ai * b.coeff(j);
            }
        }
        return TruncatedSeries(m, n, std::move(c));
    }

private:
    int min_deg_;
    int order_;
    std::vector<complex> c_;
};

/// 1/a. Requires a nonzero leading coefficient; the result's head degree is
/// the negation of a's, so the leading degree may be at most 1.
inline TruncatedSeries reciprocal(const TruncatedSeries& a) {
    const int lead = a.leading_degree();
    if (lead > a.order()) {
        throw zero_leading_coefficient_error("reciprocal: series has no nonzero coefficient");
    }
    if (-lead < -1) {
        throw order_mismatch_error("reciprocal: result would carry a z^2 or higher head");
    }
    const complex a0 = a.coeff(lead);
    const int n = a.order() - lead;  // work relative to the normalized tail
    std::vector<complex> b(static_cast<std::size_t>(n) + 1, complex(0.0, 0.0));
    b[0] = 1.0 / a0;
    for (int k = 1; k <= n; ++k) {
        complex acc(0.0, 0.0);
        for (int j = 1; j <= k; ++j) {
            acc += a.coeff(lead + j) * b[static_cast<std::size_t>(k - j)];
        }
        b[static_cast<std::size_t>(k)] = -acc / a0;
    }
    return TruncatedSeries(-lead, n - lead, std::move(b));
}

/// exp(a). Requires no z head; the constant term exponentiates separately.
inline TruncatedSeries exp(const TruncatedSeries& a) {
    if (a.leading_degree() < 0) {
        throw order_mismatch_error("exp: series must have no z head");
    }
    const int n = a.order();
    const complex scale = std::exp(a.coeff(0));
    std::vector<complex> e(static_cast<std::size_t>(n) + 1, complex(0.0, 0.0));
    e[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        complex acc(0.0, 0.0);
        for (int j = 1; j <= k; ++j) {
            acc += static_cast<double>(j) * a.coeff(j) * e[static_cast<std::size_t>(k - j)];
        }
        e[static_cast<std::size_t>(k)] = acc / static_cast<double>(k);
    }
    for (auto& v : e) v *= scale;
    return TruncatedSeries(0, n, std::move(e));
}

/// log(a). Requires leading degree exactly 0 with nonzero constant term.
inline TruncatedSeries log(const TruncatedSeries& a) {
    const int lead = a.leading_degree();
    if (lead > a.order() || a.coeff(0) == complex(0.0, 0.0)) {
        throw zero_leading_coefficient_error("log: constant term must be nonzero");
    }
    if (lead != 0) {
        throw order_mismatch_error("log: series must start at degree 0");
    }
    const complex a0 = a.coeff(0);
    const int n = a.order();
    std::vector<complex> l(static_cast<std::size_t>(n) + 1, complex(0.0, 0.0));
    l[0] = std::log(a0);
    for (int k = 1; k <= n; ++k) {
        complex acc = static_cast<double>(k) * a.coeff(k);
        for (int j = 1; j < k; ++j) {
            acc -= static_cast<double>(j) * l[static_cast<std::size_t>(j)] * a.coeff(k - j);
        }
        l[static_cast<std::size_t>(k)] = acc / (static_cast<double>(k) * a0);
    }
    return TruncatedSeries(0, n, std::move(l));
}

/// outer(inner(z)): outer is read as a Taylor polynomial sum_j outer_j y^j,
/// inner must vanish at infinity (min_deg >= 1).
inline TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (outer.min_deg() < 0) {
        throw order_mismatch_error("compose: outer series must have min_deg >= 0");
    }
    if (inner.leading_degree() < 1) {
        throw order_mismatch_error("compose: inner series must have min_deg >= 1");
    }
    const int n = std::min(outer.order(), inner.order());
    TruncatedSeries acc = TruncatedSeries::constant(outer.coeff(outer.order()), n);
    for (int j = outer.order() - 1; j >= 0; --j) {
        acc = acc * inner.truncated(n) + TruncatedSeries::constant(outer.coeff(j), n);
    }
    return acc;
}

/// Series of theta_1(u(z))/theta_4(u(z)) through order N, by composing the
/// Taylor expansions of theta_1 and theta_4 at 0 with u(z). The leading
/// behavior is pi theta_2(0) theta_3(0) c_1 / z + O(z^{-2}).
inline TruncatedSeries theta_ratio_of_series(const TruncatedSeries& u, const ModularParam& tau, int n) {
    if (n < 0 || n > 8) {
        throw unsupported_order_error("theta_ratio_of_series: order must be between 0 and 8");
    }
    if (u.leading_degree() < 1) {
        throw order_mismatch_error("theta_ratio_of_series: u must vanish at infinity (min_deg >= 1)");
    }
    if (u.is_zero()) return TruncatedSeries::zero(n);
    const auto tay1 = theta_taylor_at_zero(1, tau, n);
    const auto tay4 = theta_taylor_at_zero(4, tau, n);
    std::vector<complex> c1v, c4v;
    for (int d = 0; d <= n; ++d) {
        c1v.push_back(tay1[static_cast<std::size_t>(d)]);
        c4v.push_back(tay4[static_cast<std::size_t>(d)]);
    }
    const TruncatedSeries t1ized = compose(TruncatedSeries(0, n, c1v), u.truncated(n));
    const TruncatedSeries t4ized = compose(TruncatedSeries(0, n, c4v), u.truncated(n));
    return t1ized * reciprocal(t4ized);
}

/// Series of S(u(z)) + log z, normalized so that exp of it equals
/// z * theta_1(u(z))/theta_4(u(z)); equivalently -(1/2) log w(z).
///
/// n is capped at 7: the degree-n coefficient of z * ratio needs the theta
/// Taylor expansion through n+1, and that expansion stops at 8.
inline TruncatedSeries s_of_series(const TruncatedSeries& u, const ModularParam& tau, int n) {
    if (n < 0 || n > 7) {
        throw unsupported_order_error("s_of_series: order must be between 0 and 7");
    }
    const TruncatedSeries ratio = theta_ratio_of_series(u, tau, n + 1);
    if (ratio.coeff(1) == complex(0.0, 0.0)) {
        throw zero_leading_coefficient_error("s_of_series: u has no 1/z term, log not defined");
    }
    return log(ratio.shifted(-1).truncated(n));
}

} // namespace pfaffell

#endif // PFAFFELL_SERIES_HPP
