#pragma once

#include "conegeo/geodesic.hpp"
#include "conegeo/jordan.hpp"

#include <optional>
#include <vector>

namespace conegeo {

enum class UniqueStatus { unique, non_unique, incomparable };

// How a verdict was reached:
//   collinear   ray segments are always unique geodesics
//   unbalanced  M(x/y) != M(y/x): both concatenation orders are geodesics
//   spectral    relative spectrum has exactly two clusters (or not)
//   face_span   boundary-face intersection rank test for facet cones
//   two_dim     every two-dimensional cone is uniquely geodesic
//   oracle      randomized midpoint search (never produced by the certified
//               routines; reserved for oracle-derived verdicts)
enum class UniqueMethod { collinear, unbalanced, spectral, face_span, two_dim, oracle };

struct UniquenessVerdict {
  UniqueStatus status;
  UniqueMethod method;
  // Populated for every non_unique verdict: an alternative-midpoint point w
  // with d(x,w) + d(w,y) = d(x,y) within tol::witness_eq, at least
  // tol::off_path away (sup norm, after normalization) from the canonical
  // path.
  std::optional<Point> witness;
  // Clustered relative spectrum, when the route computes one.
  std::optional<std::vector<double>> spectrum;
};

// d(x,w) + d(w,y) - d(x,y); zero exactly on points of some geodesic.
double midpoint_defect(const ConeSpec& cone, const Point& x, const Point& y,
                       const Point& w);

// Minimum over the path of sup|w - gamma(t)| / max(sup|w|, sup|gamma(t)|):
// a scale-free pointwise gap, located by a coarse scan over `samples`
// arclength knots and refined around the best bracket.  Points on the path
// score ~0; genuine detours score their true relative separation.
double off_path_distance(const GeodesicPath& path, const Point& w, int samples = 64);

// Is the Thompson-metric geodesic from x to y unique?  Dispatch:
// collinear -> unique; unbalanced -> non_unique (alternative-order midpoint
// witness); two-dimensional ambient -> unique; lorentz/psd -> spectral test;
// orthant/polyhedral -> face-span test.  Throws invalid_input for
// non-interior or equal points.
UniquenessVerdict is_unique(const ConeSpec& cone, const Point& x, const Point& y);

// Certified test for balanced pairs in facet-described cones.  Computes the
// line-boundary points x', y', their active facet sets (facet value <=
// tol::active_facet after sup normalization), and the joint null space of the
// active rows.  Full rank means unique; otherwise a null direction z gives
// the witness zeta + delta z (delta backtracked from 1e-2).
UniquenessVerdict face_span_test(const ConeSpec& cone, const Point& x, const Point& y);

// Constructive witness for a balanced pair whose relative spectrum has an
// intermediate cluster: maps (y, x) to (e, z) by P(y^{-1/2}), forms
// z_eps = (z + eps c_i)^{1/2} for the intermediate idempotent c_i, and maps
// back by P(y^{1/2}).  eps < min(r - lambda_i, r lambda_i^2 - lambda_i) per
// the exact-midpoint requirement; pass epsilon >= 0 to fix it, or keep the
// default to auto-backtrack from 1e-2 until the midpoint equalities hold
// within tol::witness_eq.
Point spectral_witness(const JordanAlgebra& alg, const Point& x, const Point& y,
                       int intermediate_index, double epsilon = -1.0);

// Is the Hilbert-metric (projective) geodesic through [x], [y] unique?
// Lorentz/psd: unique iff the relative spectrum has exactly two clusters.
// Orthant/polyhedral: rescale to a balanced pair and run the face-span test.
// Agrees with is_unique(x, balance_scale * y).
UniquenessVerdict hilbert_unique(const ConeSpec& cone, const Point& x, const Point& y);

// Randomized midpoint search.  Samples w = zeta + delta u around the
// canonical midpoint zeta (u a random unit direction, delta log-uniform in
// [1e-4, radius]), then polishes the lowest-defect candidates by local
// search.  Returns the first w that is interior, has defect <=
// tol::oracle_defect, and sits >= tol::off_path off the canonical path;
// nullopt when the search exhausts.  One-sided: a returned witness is always
// genuine, absence proves nothing.
std::optional<Point> midpoint_oracle(const ConeSpec& cone, const Point& x, const Point& y,
                                     long samples = 10000, double radius = 0.5,
                                     std::uint64_t seed = 0);

}  // namespace conegeo
