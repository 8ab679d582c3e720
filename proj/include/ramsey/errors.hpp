#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Bad argument for a library operation (size mismatch, out-of-range
// parameter, unsorted input, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The request is well-formed but exceeds a hard resource guard
// (enumeration too large, bignum too big).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wrong combination of CLI/construction options.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal guarantee failed (e.g. the builder strategy ran out of
// budget, which its contract says cannot happen).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ramsey
