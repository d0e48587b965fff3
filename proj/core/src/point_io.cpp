#include "diskcover/point_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace diskcover {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_coordinate(std::string_view token, std::size_t line) {
  double v = 0.0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  if (!token.empty() && *begin == '+') {
    ++begin;
  }
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "invalid coordinate '" + std::string(token) + "'");
  }
  if (!std::isfinite(v)) {
    throw ParseError(line, "non-finite coordinate '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::vector<Point> parse_points(std::istream& in) {
  std::vector<Point> pts;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(raw);
    if (s.empty() || s.front() == '#') {
      continue;
    }
    std::string_view xs;
    std::string_view ys;
    if (const auto comma = s.find(','); comma != std::string_view::npos) {
      xs = trim(s.substr(0, comma));
      ys = trim(s.substr(comma + 1));
    } else {
      const auto ws = s.find_first_of(" \t");
      if (ws == std::string_view::npos) {
        throw ParseError(line, "expected two coordinates");
      }
      xs = s.substr(0, ws);
      ys = trim(s.substr(ws));
    }
    if (xs.empty() || ys.empty() || ys.find_first_of(" \t,") != std::string_view::npos) {
      throw ParseError(line, "expected exactly two coordinates");
    }
    pts.push_back(Point{parse_coordinate(xs, line), parse_coordinate(ys, line), pts.size()});
  }
  return pts;
}

std::vector<Point> read_point_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  return parse_points(in);
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

void write_points(std::ostream& out, std::span<const Point> pts) {
  for (const Point& p : pts) {
    out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
  }
}

void write_point_file(const std::filesystem::path& path, std::span<const Point> pts) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  write_points(out, pts);
}

}  // namespace diskcover
