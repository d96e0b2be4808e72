#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relflow {

/// Malformed input. The message carries file and line context.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

namespace text {

std::vector<std::string_view> split(std::string_view line, char sep);
std::vector<std::string_view> split_whitespace(std::string_view line);

/// Calls `fn(line_number, line)` for every non-blank line not starting with '#'.
/// Line numbers are 1-based. Trailing '\r' is stripped.
void for_each_record(std::istream& in, const std::function<void(std::size_t, std::string_view)>& fn);

/// Opens `path` and forwards to the stream overload; missing files raise
/// std::runtime_error naming the path.
void for_each_record(const std::filesystem::path& path,
                     const std::function<void(std::size_t, std::string_view)>& fn);

/// Strict whole-field parses; throw std::invalid_argument on junk.
unsigned long long parse_uint(std::string_view field);
long long parse_int(std::string_view field);
double parse_double(std::string_view field);

/// %.{digits}g formatting.
std::string format_sig(double value, int digits);

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// so readers never observe a partial file.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace text
}  // namespace relflow
