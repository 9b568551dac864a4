#ifndef PFAFFELL_ERRORS_HPP
#define PFAFFELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pfaffell {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root bracketing: f has the same sign at both ends of the bracket.
class no_sign_change_error : public error {
public:
    using error::error;
};

/// Iterative solve did not converge within the iteration budget.
class max_iterations_error : public error {
public:
    using error::error;
};

/// A callback produced a non-finite value or threw.
class evaluation_failure : public error {
public:
    using error::error;
};

/// Derivative order outside the supported range.
class unsupported_order_error : public error {
public:
    using error::error;
};

/// Argument too close to a zero of theta_1 or theta_4 (pole of a ratio).
class pole_or_zero_error : public error {
public:
    using error::error;
};

/// Input outside the solvable/representable domain.
class domain_error : public error {
public:
    using error::error;
};

/// Input data fail an internal consistency relation.
class inconsistent_data_error : public error {
public:
    explicit inconsistent_data_error(const std::string& what, double residual = 0.0)
        : error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Series operation requires a nonzero leading coefficient.
class zero_leading_coefficient_error : public error {
public:
    using error::error;
};

/// Series operands have incompatible degree structure for the operation.
class order_mismatch_error : public error {
public:
    using error::error;
};

/// Time index outside the model's support range.
class index_out_of_range_error : public error {
public:
    using error::error;
};

/// Equation requires a model of the other variant (KP vs Toda).
class variant_mismatch_error : public error {
public:
    using error::error;
};

/// Spectral arguments hit a singular configuration (e.g. z = zeta).
class singular_args_error : public error {
public:
    using error::error;
};

/// Constraint search exhausted its restart budget.
class no_solution_found_error : public error {
public:
    explicit no_solution_found_error(const std::string& what, double best_residual)
        : error(what), best_residual_(best_residual) {}
    double best_residual() const { return best_residual_; }

private:
    double best_residual_;
};

/// Model depends on an odd time, so the even-time reduction does not apply.
class odd_time_dependence_error : public error {
public:
    using error::error;
};

/// Linear pivot in an order-by-order solve underflowed.
class pivot_failure_error : public error {
public:
    using error::error;
};

} // namespace pfaffell

#endif // PFAFFELL_ERRORS_HPP
