#pragma once

#include <stdexcept>
#include <string>

namespace pathmetric {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input errors (edge-list ingestion and graph construction).
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class AsymmetryError : public InputError {
public:
    using InputError::InputError;
};

class DiagonalError : public InputError {
public:
    using InputError::InputError;
};

class NegativeWeightError : public InputError {
public:
    using InputError::InputError;
};

class ZeroWeightError : public InputError {
public:
    using InputError::InputError;
};

// Query errors: a well-formed input was asked something it cannot answer.
class QueryError : public Error {
public:
    using Error::Error;
};

class UnknownVertex : public QueryError {
public:
    using QueryError::QueryError;
};

class Unreachable : public QueryError {
public:
    using QueryError::QueryError;
};

class SameVertex : public QueryError {
public:
    using QueryError::QueryError;
};

class NotDistinct : public QueryError {
public:
    using QueryError::QueryError;
};

class Disconnected : public QueryError {
public:
    using QueryError::QueryError;
};

class SizeMismatch : public QueryError {
public:
    using QueryError::QueryError;
};

class InvalidMetric : public QueryError {
public:
    using QueryError::QueryError;
};

class EmptyInput : public QueryError {
public:
    using QueryError::QueryError;
};

class MixedStart : public QueryError {
public:
    using QueryError::QueryError;
};

class InvalidPath : public QueryError {
public:
    using QueryError::QueryError;
};

class DuplicatePath : public QueryError {
public:
    using QueryError::QueryError;
};

/// An exact oracle refused an input above its hard enumeration cap.
class TooLarge : public Error {
public:
    using Error::Error;
};

}  // namespace pathmetric
