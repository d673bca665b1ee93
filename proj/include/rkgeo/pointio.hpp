#pragma once

#include <string>
#include <vector>

#include "rkgeo/kernels.hpp"

namespace rkgeo {

/// Point literals used by the CLI and config files:
///   "re,im"        scalar with explicit imaginary part
///   "re"           scalar, imaginary part 0
///   "[c1;c2;...]"  vector point, each component "re,im" or "re"
/// The decimal separator is '.', independent of locale.
Point parse_point(const std::string& text);
Complex parse_complex(const std::string& text);

std::string format_complex(Complex z);  // "re,im" with 17 significant digits
std::string format_point(const Point& p);

std::vector<Point> parse_points(const std::vector<std::string>& texts);

}  // namespace rkgeo
