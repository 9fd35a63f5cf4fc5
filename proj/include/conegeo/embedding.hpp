#pragma once

#include "conegeo/cone.hpp"

#include <vector>

namespace conegeo {

// Coordinatewise log of the facet values: Psi(x) = (log psi_1(x), ...,
// log psi_m(x)).  An isometry from (C^o, thompson) into (R^m, sup norm) for
// facet-described cones.
struct LogEmbedding {
  Matrix facets;
  int target_dim;

  explicit LogEmbedding(const ConeSpec& cone);
  Vector apply(const Point& x) const;  // requires all facet values > 0
};

Vector log_embed(const ConeSpec& cone, const Point& x);

// A simplicial cone {B c : c >= 0} for an invertible basis matrix B is
// isometric to a normed space: x -> log(B^{-1} x) coordinatewise, onto
// (R^n, sup norm).
struct SimplicialMap {
  Matrix basis;      // columns are the generators
  Matrix to_coords;  // B^{-1}
  double condition;  // sigma_max / sigma_min of B

  Vector map(const Point& x) const;    // log of the basis coordinates
  Point unmap(const Vector& v) const;  // B exp(v)
};

SimplicialMap simplicial_isometry(const Matrix& basis);

// Generalized Gromov product
//   (x|y)_{p,eta} = (d(x,p) + d(y,p) - eta d(x,y)) / 2.
double gromov_product(const ConeSpec& cone, const Point& p, const Point& x,
                      const Point& y, double eta);

// Distance evaluation along the chord x(u) = (1-u) w + u p from an interior
// base p; u is the remaining chord fraction, so x(1) = p and x(u) -> w as
// u -> 0.  Works in exact two-ray coordinates of the planar section
// spanned by w and p, so it stays accurate arbitrarily close to the
// boundary where the generic evaluators lose the tiny spectral gap to
// cancellation.
class SectionChord {
 public:
  SectionChord(const ConeSpec& cone, const Point& p, const Point& w);
  double distance(double u) const;  // d(x(u), p), strictly decreasing in u
  Point point(double u) const;      // (1-u) w + u p

 private:
  Point w_, p_;
  double pw_ = 0.0, pv_ = 0.0;  // p = pw w + pv v for the second boundary ray v
};

struct BoundarySample {
  Point x;
  double t;         // x = t w + (1-t) p
  double distance;  // d(x, p), equal to its index k within 1e-10
};

// For each boundary direction w_i (normalized by the cone's positive
// functional), the points x_k^i on the chord toward p with d(x_k^i, p) = k
// for k = 1..k_max, found by monotone bisection to 1e-10 on the distance.
// Validates: p interior, each w_i on the boundary, every chord midpoint
// (w_i + w_j)/2 interior.
std::vector<std::vector<BoundarySample>> boundary_sequences(
    const ConeSpec& cone, const Point& p, const std::vector<Point>& directions,
    int k_max);

// The Gromov products of two boundary sequences at matching indices:
//   values[k-1] = (d(x_k,p) + d(y_k,p) - eta d(x_k,y_k)) / 2
// using the chordwise distances for the p-legs.
struct GromovSeries {
  Point base;
  std::vector<BoundarySample> seq_x, seq_y;
  double eta;
  std::vector<double> values;
};

GromovSeries gromov_series(const ConeSpec& cone, const Point& p, const Point& w1,
                           const Point& w2, double eta, int k_max);

}  // namespace conegeo
