#include "tvc/text_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tvc/errors.hpp"

namespace tvc {
namespace {

std::string to_chars_string(double value, std::chars_format fmt, int precision) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = precision < 0 ? std::to_chars(buf.data(), buf.data() + buf.size(), value, fmt)
                                 : std::to_chars(buf.data(), buf.data() + buf.size(), value, fmt,
                                                 precision);
  if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
  std::string out(buf.data(), res.ptr);
  if (out == "-0") out = "0";
  return out;
}

}  // namespace

std::string format_sig6(double value) { return to_chars_string(value, std::chars_format::general, 6); }

std::string format_exact(double value) { return to_chars_string(value, std::chars_format::general, -1); }

std::optional<double> parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<long> parse_long(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  long value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view text) noexcept {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto first = text.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(ws);
  return text.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw DataError("write failed: " + path.string());
}

CsvBuilder::CsvBuilder(const std::vector<std::string>& header) : width_(header.size()) {
  row(header);
}

CsvBuilder& CsvBuilder::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw std::logic_error("csv row width mismatch");
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) text_ += ',';
    text_ += cells[k];
  }
  text_ += '\n';
  return *this;
}

}  // namespace tvc
