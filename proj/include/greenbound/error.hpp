#pragma once

#include <stdexcept>
#include <string>

namespace greenbound {

/// Argument outside the mathematical domain of a function (u <= 1, |z| >= 1, poles, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A series or quadrature failed to reach its tolerance within its budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter set violates one of the hypotheses of the bound theorem.
/// `constraint()` names the violated inequality so callers can report it.
class ConstraintError : public std::invalid_argument {
public:
    ConstraintError(std::string constraint, const std::string& detail)
        : std::invalid_argument(constraint + ": " + detail), constraint_(std::move(constraint)) {}

    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

}  // namespace greenbound
