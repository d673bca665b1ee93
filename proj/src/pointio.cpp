#include "rkgeo/pointio.hpp"

#include <charconv>
#include <cstdio>

namespace rkgeo {
namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text) {
  const std::string t = strip(text);
  double value = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    fail(ErrorCode::InvalidArgument, "bad numeric literal '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const std::vector<std::string> parts = split(strip(text), ',');
  if (parts.size() == 1) return Complex(parse_double(parts[0]), 0.0);
  if (parts.size() == 2)
    return Complex(parse_double(parts[0]), parse_double(parts[1]));
  fail(ErrorCode::InvalidArgument, "bad point literal '" + text + "'");
}

Point parse_point(const std::string& text) {
  const std::string t = strip(text);
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']')
      fail(ErrorCode::InvalidArgument, "unterminated vector literal '" + text + "'");
    std::vector<Complex> comps;
    for (const std::string& part : split(t.substr(1, t.size() - 2), ';'))
      comps.push_back(parse_complex(part));
    return Point::vector(std::move(comps));
  }
  return Point::scalar(parse_complex(t));
}

std::string format_complex(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g", z.real(), z.imag());
  return buf;
}

std::string format_point(const Point& p) {
  if (p.coords.size() == 1) return format_complex(p.coords(0));
  std::string out = "[";
  for (Eigen::Index i = 0; i < p.coords.size(); ++i) {
    if (i) out += ';';
    out += format_complex(p.coords(i));
  }
  out += ']';
  return out;
}

std::vector<Point> parse_points(const std::vector<std::string>& texts) {
  std::vector<Point> pts;
  pts.reserve(texts.size());
  for (const std::string& t : texts) pts.push_back(parse_point(t));
  return pts;
}

}  // namespace rkgeo
