#pragma once

#include <stdexcept>
#include <string>

namespace mfock {

/// Malformed textual or structured input (bad rational, bad record layout).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a documented precondition (negative time, degree mismatch, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An operation needs a Jacobi coefficient beyond the stored depth.
class DepthError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace mfock
