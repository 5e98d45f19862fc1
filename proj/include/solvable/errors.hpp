#pragma once

#include <stdexcept>
#include <string>

namespace solvable {

// Bad call shape: empty sequences, mismatched variables, malformed input.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameters outside the region where an object is defined.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// An identity that must hold exactly did not.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Linearly dependent seeds, vanishing Wronskian.
struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct AccuracyError : std::runtime_error {
    AccuracyError(const std::string& what, double estimate)
        : std::runtime_error(what), estimate(estimate) {}
    double estimate;
};

}  // namespace solvable
