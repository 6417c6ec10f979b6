#pragma once

#include <stdexcept>
#include <string>

namespace invdeg {

/// Raised when a caller passes arguments outside an operation's domain.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exact check that must hold comes out false
/// (e.g. interpolated polynomial fails an extra sample point).
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant is broken, such as a nonpositive
/// multidegree. Signals a bug rather than bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace invdeg
