#pragma once

#include <stdexcept>
#include <string>

namespace pairrank {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration or out-of-domain argument. CLI exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Numeric argument outside its documented domain (e.g. probability not in [0,1]).
class DomainError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Brute-force solver asked to handle more items than its size limit.
class SizeLimitError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Prompt template missing or carrying unresolved placeholders.
class TemplateError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Malformed or inconsistent input data. CLI exit code 3.
class DataError : public Error {
public:
    using Error::Error;
};

/// A likelihood or solver needed a preference entry that is absent.
class IncompleteMatrixError : public DataError {
public:
    using DataError::DataError;
};

/// Matrix-backed comparator queried for a pair it does not hold.
class MissingPairError : public IncompleteMatrixError {
public:
    using IncompleteMatrixError::IncompleteMatrixError;
};

/// Correlation undefined for the given inputs (constant ranks, length < 2).
class UndefinedCorrelationError : public DataError {
public:
    using DataError::DataError;
};

/// Score calibration impossible (zero model-prior mass under posterior mass).
class CalibrationError : public DataError {
public:
    using DataError::DataError;
};

/// Transport or response-parse failure in a comparator backend. CLI exit code 4.
class BackendError : public Error {
public:
    using Error::Error;
};

/// Neither choice token present in the returned log-probabilities.
class ExtractionError : public BackendError {
public:
    using BackendError::BackendError;
};

} // namespace pairrank
