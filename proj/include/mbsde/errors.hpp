#pragma once
#include <stdexcept>
#include <string>

namespace mbsde {

/// A point (or an evaluation argument) left the chart domain / domain of definition.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A geodesic left the chart before reaching parameter 1; carries the exit parameter.
struct DomainExitError : DomainError {
    DomainExitError(const std::string& what, double exit_param)
        : DomainError(what), exit_parameter(exit_param) {}
    double exit_parameter;
};

/// An iterative solver (shooting, Newton, bisection) failed; carries the final residual.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double res)
        : std::runtime_error(what), residual(res) {}
    double residual;
};

/// A user-supplied function returned a non-finite value; carries a witness description.
struct EvaluationError : std::runtime_error {
    EvaluationError(const std::string& what, std::string witness_in)
        : std::runtime_error(what + " [witness: " + witness_in + "]"),
          witness(std::move(witness_in)) {}
    std::string witness;
};

/// Scenario / configuration problem (bad key, bad value, schema mismatch).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Regression design matrix unusable (singular / non-finite).
struct BasisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A property the estimator was asked to certify failed; carries the witness.
struct PropertyViolation : std::runtime_error {
    PropertyViolation(const std::string& what, std::string witness_in)
        : std::runtime_error(what + " [witness: " + witness_in + "]"),
          witness(std::move(witness_in)) {}
    std::string witness;
};

} // namespace mbsde
