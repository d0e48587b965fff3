#pragma once

#include "diskcover/geometry.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace diskcover {

/// Raised for malformed point files. line() is 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// Text format: one point per line, "x y" or "x,y". Lines starting with '#'
// (after leading whitespace) and blank lines are skipped. Ids follow line order.
[[nodiscard]] std::vector<Point> parse_points(std::istream& in);
[[nodiscard]] std::vector<Point> read_point_file(const std::filesystem::path& path);

/// Writes coordinates with round-trip precision.
void write_points(std::ostream& out, std::span<const Point> pts);
void write_point_file(const std::filesystem::path& path, std::span<const Point> pts);

/// Shortest decimal string that parses back to the same double.
[[nodiscard]] std::string format_double(double v);

}  // namespace diskcover
