#pragma once

#include <stdexcept>
#include <string>

namespace tvkit {

/// Input violates a domain bound (rate out of range, negative time, ...).
class OutOfDomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A pair (v_from, v_to) with v_to < v_from cannot be a knowledge valuation.
class AxiomViolationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptyStreamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptyInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// NPV has the same sign at both ends of the root bracket.
class NoSignChangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Quadrature (or another numeric routine) exhausted its budget before
/// reaching the requested tolerance.
class NumericalFailureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Density evaluation at an endpoint where the exponent is negative.
class EndpointSingularityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The divergence probe did not cross the threshold within n_max periods.
/// Carries the value reached at n_max so the caller can decide how much
/// further to push.
class InconclusiveError : public std::runtime_error {
public:
    InconclusiveError(double value_at_n_max, std::string what)
        : std::runtime_error(std::move(what)), value_at_n_max_(value_at_n_max) {}

    double value_at_n_max() const noexcept { return value_at_n_max_; }

private:
    double value_at_n_max_;
};

} // namespace tvkit
