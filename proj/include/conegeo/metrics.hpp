#pragma once

#include "conegeo/cone.hpp"

#include <optional>

namespace conegeo {

// Order ratios of two interior points:
//   M(x/y) = inf{ b > 0 : x <= b y }   m(x/y) = sup{ a > 0 : a y <= x }
// Facet cones: max/min of psi_i(x)/psi_i(y).  Lorentz/psd: the extreme
// eigenvalues of P(y^{-1/2}) x.  Always m(x/y) = 1/M(y/x).
struct OrderRatios {
  double M;
  double m;
};

OrderRatios m_ratio(const ConeSpec& cone, const Point& x, const Point& y);

// Thompson's part metric  d(x,y) = log max(M(x/y), M(y/x)).
double thompson_distance(const ConeSpec& cone, const Point& x, const Point& y);

// Hilbert's projective metric  delta(x,y) = log(M(x/y) * M(y/x)).
// Invariant under rescaling either argument; delta <= 2 d.
double hilbert_distance(const ConeSpec& cone, const Point& x, const Point& y);

// Where the affine line through interior points x and y crosses the cone
// boundary.  beyond_x is the crossing past x (a positive multiple of
// x - m(x/y) y), beyond_y the crossing past y (of M(x/y) y - x).  A crossing
// is absent when the line never exits on that side -- the direction lies in
// the cone, e.g. the line runs parallel to a facet.  That case sets the
// degenerate flag.
struct LineBoundary {
  std::optional<Point> beyond_x;
  std::optional<Point> beyond_y;
  bool degenerate() const { return !beyond_x || !beyond_y; }
};

LineBoundary line_boundary_points(const ConeSpec& cone, const Point& x, const Point& y);

// Hilbert's original cross-ratio metric on the section {p : <phi, p> = 1}:
//   kappa(x,y) = log( (|x'-y| / |x'-x|) * (|y'-x| / |y'-y|) )
// with x', y' the line-boundary crossings mapped to the section.  Equals the
// projective metric; falls back on the M*m formula when the crossing is
// degenerate.  phi must be strictly positive on all four points.
double cross_ratio_distance(const ConeSpec& cone, const Point& x, const Point& y,
                            const Vector& phi);

}  // namespace conegeo
