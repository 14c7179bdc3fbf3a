#pragma once

#include <stdexcept>
#include <string>

namespace dplus {

/// A claimed exact quotient has a nonzero remainder.
struct NonExactDivision : std::domain_error {
    NonExactDivision() : std::domain_error("non-exact polynomial division") {}
    explicit NonExactDivision(const std::string& what) : std::domain_error(what) {}
};

/// Symbolic work requested beyond the configured degree cap.
struct ScaleCapExceeded : std::domain_error {
    using std::domain_error::domain_error;
};

/// Input outside an operation's domain (zero polynomial, invalid partition, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed textual input.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed; indicates a bug rather than bad input.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace dplus
