#pragma once

#include <stdexcept>
#include <string>

namespace evtss {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument values (out-of-domain parameters, empty input, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// CSV header does not provide a mapped column.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Malformed cell in a CSV data row; carries the 1-based row index.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t row)
        : Error(msg), row_(row) {}
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

// Design matrix unusable for estimation (constant or non-finite column).
class DegenerateDesignError : public Error {
public:
    using Error::Error;
};

// Too few observations for the requested fit.
class SampleSizeError : public Error {
public:
    using Error::Error;
};

// API misuse (e.g. likelihood-ratio test on non-nested models).
class UsageError : public Error {
public:
    using Error::Error;
};

// Numerical failure that cannot be reported as a flagged result.
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace evtss
