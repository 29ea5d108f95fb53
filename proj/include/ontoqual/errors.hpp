#pragma once

#include <stdexcept>
#include <string>

namespace ontoqual {

// Base of every exception thrown by this library. Validation findings are
// reported as data (see Violation in inventory.hpp), not as exceptions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input document: JSON syntax errors, missing or ill-typed fields.
class ParseError : public Error {
public:
    using Error::Error;
};

// Input document declares a schema version this build does not understand.
class SchemaVersionError : public ParseError {
public:
    using ParseError::ParseError;
};

// Value outside the domain of an elementary function or classifier.
class DomainError : public Error {
public:
    using Error::Error;
};

// A documented precondition was broken (ratio numerators, weight vectors,
// operator arities).
class ContractError : public Error {
public:
    using Error::Error;
};

// A requirements model violates its structural invariants.
class ModelError : public Error {
public:
    using Error::Error;
};

// A tree leaf has no, or more than one, matching elementary result.
class BindingError : public Error {
public:
    using Error::Error;
};

// Before/after inventories do not describe the same entity.
class PairingError : public Error {
public:
    using Error::Error;
};

// A basis that cannot be measured: no terms, or no relationships.
class MeasureError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure (missing or unreadable file).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace ontoqual
