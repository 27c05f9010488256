#ifndef GOR_ERRORS_HPP
#define GOR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gor {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition violation: bad index, dimension mismatch, forbidden pair.
class DomainError : public Error {
public:
  using Error::Error;
};

// A request would materialize more than the configured 2^N cap allows.
class CapacityError : public Error {
public:
  using Error::Error;
};

// Finite-arithmetic violation: a log-odds magnitude past the exp() overflow
// threshold, where odds and ratios stop being meaningful doubles.
class RangeError : public Error {
public:
  using Error::Error;
};

// A cell failed (0,1) validation; carries the offending coordinates.
class ValidationError : public Error {
public:
  ValidationError(const std::string& msg, std::size_t row, std::string column)
      : Error(msg), row_(row), column_(std::move(column)) {}

  std::size_t row() const { return row_; }
  const std::string& column() const { return column_; }

private:
  std::size_t row_;
  std::string column_;
};

// Structural file problem: missing column, no data rows, ragged row.
class SchemaError : public Error {
public:
  using Error::Error;
};

// Response column holds a single class; no model can be fit.
class DegenerateResponseError : public SchemaError {
public:
  using SchemaError::SchemaError;
};

// Base for maximum-likelihood fitting failures.
class FitError : public Error {
public:
  using Error::Error;
};

class ConvergenceError : public FitError {
public:
  using FitError::FitError;
};

class SeparationError : public FitError {
public:
  using FitError::FitError;
};

class CollinearityError : public FitError {
public:
  using FitError::FitError;
};

}  // namespace gor

#endif  // GOR_ERRORS_HPP
