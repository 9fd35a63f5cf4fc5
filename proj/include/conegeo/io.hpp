#pragma once

#include "conegeo/cone.hpp"
#include "conegeo/isometry.hpp"

#include <iosfwd>
#include <string>

namespace conegeo {

// Text formats.  Tokens are whitespace separated; '#' starts a comment that
// runs to the end of the line.
//
// Cone file:
//   cone orthant|polyhedral|lorentz|psd
//   dim N                  # ambient dimension (psd: a perfect square k*k)
//   facets M               # polyhedral only, followed by M rows of N entries
//   <facet rows...>
//
// Point file: an optional leading "point" keyword, then exactly N numbers.
//
// Map file: one or more stanzas, composed in file order:
//   map linear             followed by N*N entries, row-major
//   map congruence         followed by N entries (a strictly interior point)
//   map inversion
//   map partial_inversion
//   index i                # 1-based coordinate, orthant only

ConeSpec read_cone(std::istream& in);
ConeSpec read_cone_file(const std::string& path);

Point read_point(std::istream& in, const ConeSpec& cone);
Point read_point_file(const std::string& path, const ConeSpec& cone);

ConeMap read_map(std::istream& in, const ConeSpec& cone);
ConeMap read_map_file(const std::string& path, const ConeSpec& cone);

// Fixed-point rendering with the given number of digits after the point.
// Values that round to zero at this precision are printed as a plain zero
// (no negative zero).
std::string format_real(double value, int precision);

}  // namespace conegeo
