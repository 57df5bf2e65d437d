#pragma once

#include <stdexcept>
#include <string>

namespace robin {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Internal scaling of a recurrence could not be kept in range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A root could not be bracketed by a sign change.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative procedure (quadrature, eigensolver) failed to reach tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested target lies outside the attainable range.
class OutOfRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Input mesh violates a structural invariant.
class MeshError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A comparison could not be decided at the available resolution.
class InsufficientResolution : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace robin
