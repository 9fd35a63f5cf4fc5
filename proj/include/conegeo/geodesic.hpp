#pragma once

#include "conegeo/cone.hpp"

#include <variant>
#include <vector>

namespace conegeo {

// One unit-speed leg of a geodesic.
//
// Type I:  gamma(t) = alpha * (e^t u + e^{-t} v)  for boundary directions
// u, v (unit sup norm) spanning the two-dimensional section through the
// endpoints.  Exists exactly when the pair is balanced, M(x/y) = M(y/x).
struct TypeOneLeg {
  Point u, v;
  double alpha;
  double t_start, t_end;  // t_start <= t_end; arclength = t_end - t_start
};

// Type II:  gamma(s) = e^{sigma s} * base along the ray through base, with
// sigma = +-1 so the leg runs at unit speed.  Every ray segment is a
// geodesic, and the unique one between its endpoints.
struct TypeTwoLeg {
  Point base;
  double log_rate;  // +1, -1, or 0 for a zero-length leg
  double t_start, t_end;
};

using GeodesicLeg = std::variant<TypeOneLeg, TypeTwoLeg>;

double leg_length(const GeodesicLeg& leg);
Point leg_eval(const GeodesicLeg& leg, double s);  // s in [0, length]

struct GeodesicPath {
  std::vector<GeodesicLeg> legs;
  double total_length = 0.0;

  // Evaluate at arclength s in [0, total_length] (clamped within
  // tol::eval_slack; outside that, invalid_input).
  Point eval(double s) const;
};

// The rescale factor lambda = sqrt(M(x/y) / M(y/x)): the pair (x, lambda y)
// is balanced, with M(x/lambda y) = M(lambda y/x) = sqrt(M(x/y) M(y/x)).
double balance_scale(const ConeSpec& cone, const Point& x, const Point& y);

// Single type I leg from x to y; requires a balanced pair (within
// tol::balanced_rel) that is not collinear.  Length = d(x,y) = half the
// projective distance.
GeodesicPath type_one_path(const ConeSpec& cone, const Point& x, const Point& y);

// Ray segment from x to lambda x; length |log lambda|.
GeodesicPath type_two_path(const ConeSpec& cone, const Point& x, double lambda);

// Unit-speed geodesic from x to y:
//   equal points      -> zero-length path
//   collinear         -> one type II leg
//   balanced          -> one type I leg
//   otherwise         -> type I from x to lambda y, then type II to y
// Total length is d(x,y) in every case.
GeodesicPath geodesic(const ConeSpec& cone, const Point& x, const Point& y);

// The other concatenation order (type II from x to x/lambda, then type I).
// Same total length; its midpoint differs from the canonical one for
// unbalanced pairs and serves as a non-uniqueness witness.
GeodesicPath geodesic_alternative(const ConeSpec& cone, const Point& x, const Point& y);

}  // namespace conegeo
