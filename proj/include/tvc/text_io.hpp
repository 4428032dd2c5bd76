#pragma once
// Number formatting/parsing and small CSV helpers shared by ingest and the
// exporters. Exports use 6 significant digits; data files meant to be read
// back use the shortest round-trip representation.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tvc {

/// 6 significant digits, "%g"-style, locale independent.
std::string format_sig6(double value);
/// Shortest representation that parses back to the same double.
std::string format_exact(double value);

std::optional<double> parse_double(std::string_view text);
std::optional<long> parse_long(std::string_view text);

std::string_view trim(std::string_view text) noexcept;
std::vector<std::string_view> split(std::string_view text, char sep);

/// Reads a whole file; throws DataError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);
/// Writes `content` verbatim (LF endings are the caller's responsibility).
void write_file(const std::filesystem::path& path, std::string_view content);

/// Accumulates CSV text with LF line endings.
class CsvBuilder {
 public:
  explicit CsvBuilder(const std::vector<std::string>& header);
  CsvBuilder& row(const std::vector<std::string>& cells);
  const std::string& str() const noexcept { return text_; }

 private:
  std::size_t width_;
  std::string text_;
};

}  // namespace tvc
