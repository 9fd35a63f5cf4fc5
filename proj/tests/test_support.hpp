#pragma once

#include "conegeo/cone.hpp"
#include "conegeo/common.hpp"

#include <cmath>
#include <initializer_list>

namespace conegeo::testing {

inline Point pt(std::initializer_list<double> coords) {
  Point p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) p(i++) = c;
  return p;
}

// Hexagonal cone in R^3: sections at height 1 are regular hexagons.  Facet
// normals (-cos(60 i), -sin(60 i), 1) for i = 0..5.
inline ConeSpec hexagonal_cone() {
  Matrix f(6, 3);
  for (int i = 0; i < 6; ++i) {
    const double a = i * M_PI / 3.0;
    f(i, 0) = -std::cos(a);
    f(i, 1) = -std::sin(a);
    f(i, 2) = 1.0;
  }
  return ConeSpec::Polyhedral(f, pt({0.0, 0.0, 1.0}));
}

// Square cone in R^3 (4 facets, non-simplicial): |x1| <= x3, |x2| <= x3.
inline ConeSpec square_cone() {
  Matrix f(4, 3);
  f << 1, 0, 1,
      -1, 0, 1,
       0, 1, 1,
       0, -1, 1;
  return ConeSpec::Polyhedral(f, pt({0.0, 0.0, 1.0}));
}

}  // namespace conegeo::testing
