#pragma once

#include <stdexcept>
#include <string>

namespace bipp {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A family hypothesis or parameter constraint is violated. The message
/// names the failed condition.
struct invalid_parameter : error {
    using error::error;
};

/// d does not divide the extension degree, or an element lies outside the
/// required subfield.
struct invalid_subfield : error {
    using error::error;
};

/// A split point violates its subspace constraints.
struct invalid_split : error {
    using error::error;
};

struct division_by_zero : error {
    using error::error;
};

/// No modular inverse exists (gcd condition fails).
struct no_inverse : error {
    using error::error;
};

/// Requested exhaustive work exceeds the configured enumeration bound.
struct field_too_large : error {
    using error::error;
};

} // namespace bipp
