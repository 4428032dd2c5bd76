#include "tvc/errors.hpp"

namespace tvc {
namespace {

std::string describe_missing(const std::vector<CellRef>& missing) {
  std::string msg = "unbalanced panel: " + std::to_string(missing.size()) + " missing cell(s):";
  for (const auto& cell : missing) msg += " " + to_string(cell);
  return msg;
}

}  // namespace

std::string to_string(const CellRef& cell) {
  return "(" + cell.country + ", " + std::to_string(cell.year) + ", " + cell.code + ")";
}

UnbalancedPanel::UnbalancedPanel(std::vector<CellRef> missing)
    : DataError(describe_missing(missing)), missing_(std::move(missing)) {}

DuplicateCell::DuplicateCell(CellRef cell)
    : DataError("duplicate cell " + to_string(cell)), cell_(std::move(cell)) {}

MalformedRow::MalformedRow(std::size_t line, const std::string& reason)
    : DataError("line " + std::to_string(line) + ": " + reason), line_(line) {}

DuplicateObservation::DuplicateObservation(std::size_t line, CellRef cell)
    : DataError("line " + std::to_string(line) + ": duplicate observation " + to_string(cell)),
      line_(line),
      cell_(std::move(cell)) {}

ManifestError::ManifestError(std::size_t line, const std::string& reason)
    : DataError("manifest line " + std::to_string(line) + ": " + reason) {}

RankDeficient::RankDeficient(std::size_t column, const std::string& reason)
    : NumericalError(reason), column_(column) {}

}  // namespace tvc
