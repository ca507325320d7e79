#pragma once

#include <stdexcept>
#include <string>

namespace roughlim {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input shape: non-square matrix, index out of range, duplicate
/// labels, dimension mismatch. Distinct from axiom violations, which concern
/// well-formed matrices that fail the partial-metric laws.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Argument outside an operation's domain (radius <= 0, empty subset,
/// negative roughness degree, unparsable rational, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// JSON input that does not match the expected schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Exact arithmetic left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Carrier too large for explicit topology materialization.
class TopologyCapError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace roughlim
