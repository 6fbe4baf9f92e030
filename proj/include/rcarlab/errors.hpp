#pragma once

#include <stdexcept>
#include <string>

namespace rcarlab {

/// Adaptive quadrature failed to reach the requested tolerance.
/// Carries the achieved error estimate of the best attempt.
class NumericalFailure : public std::runtime_error {
public:
    NumericalFailure(const std::string& what, double error_estimate)
        : std::runtime_error(what), error_estimate_(error_estimate) {}

    double error_estimate() const noexcept { return error_estimate_; }

private:
    double error_estimate_;
};

/// Requested moment does not exist (kappa_alpha with beta <= alpha).
class NonIntegrable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Poisson-measure truncation bounds cannot meet the requested tolerance.
class TruncationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Regression fit rejected (e.g. nonpositive values on a log scale).
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rcarlab
