#pragma once
// Error taxonomy. DataError covers malformed or incomplete inputs (CLI exit 2),
// NumericalError covers estimation failures (CLI exit 3).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A (country, year, variable) coordinate in the panel cube.
struct CellRef {
  std::string country;
  int year = 0;
  std::string code;

  friend bool operator==(const CellRef&, const CellRef&) = default;
};

class UnbalancedPanel : public DataError {
 public:
  explicit UnbalancedPanel(std::vector<CellRef> missing);
  const std::vector<CellRef>& missing() const noexcept { return missing_; }

 private:
  std::vector<CellRef> missing_;
};

class DuplicateCell : public DataError {
 public:
  explicit DuplicateCell(CellRef cell);
  const CellRef& cell() const noexcept { return cell_; }

 private:
  CellRef cell_;
};

class EmptyIntersection : public DataError {
 public:
  using DataError::DataError;
};

class UnknownVariable : public DataError {
 public:
  using DataError::DataError;
};

class MalformedRow : public DataError {
 public:
  MalformedRow(std::size_t line, const std::string& reason);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateObservation : public DataError {
 public:
  DuplicateObservation(std::size_t line, CellRef cell);
  std::size_t line() const noexcept { return line_; }
  const CellRef& cell() const noexcept { return cell_; }

 private:
  std::size_t line_;
  CellRef cell_;
};

class GapInSeries : public DataError {
 public:
  using DataError::DataError;
};

class ManifestError : public DataError {
 public:
  ManifestError(std::size_t line, const std::string& reason);
};

class MismatchedYears : public DataError {
 public:
  using DataError::DataError;
};

class DimensionMismatch : public DataError {
 public:
  using DataError::DataError;
};

/// Design matrix [1 | X] is not numerically full rank. column() indexes the
/// augmented design: 0 is the intercept, j >= 1 is regressor j-1.
class RankDeficient : public NumericalError {
 public:
  RankDeficient(std::size_t column, const std::string& reason);
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

class InsufficientObservations : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateDesign : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

std::string to_string(const CellRef& cell);

}  // namespace tvc
