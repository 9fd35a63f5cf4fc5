#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace conegeo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// A point in a cone's ambient coordinate space.  Symmetric-matrix points are
// stored as flat row-major vectors of length k*k; everything else is the
// obvious coordinate vector.
using Point = Eigen::VectorXd;

// Bad files, dimension mismatches, violated preconditions (non-interior
// points, collinear inputs, non-positive section functionals).  CLI exit 2.
struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Solver breakdowns: non-bracketing bisections, exhausted witness searches,
// eigensolver trouble.  CLI exit 3.
struct numeric_failure : std::runtime_error {
  explicit numeric_failure(const std::string& what) : std::runtime_error(what) {}
};

// Pinned tolerances.  These are contract values, not implementation knobs;
// tests assert against them.
namespace tol {
inline constexpr double membership = 1e-10;     // margin cutoff after sup-norm normalization
inline constexpr double sym_asymmetry = 1e-10;  // max |A - A^T| entry for matrix points
inline constexpr double ratio_duality = 1e-12;  // m(x/y) * M(y/x) = 1
inline constexpr double cluster_rel = 1e-7;     // relative eigenvalue gap merged into one cluster
inline constexpr double balanced_rel = 1e-9;    // |M(x/y) - M(y/x)| <= tol * M(x/y)
inline constexpr double collinear_rel = 1e-10;  // on coordinates after sup normalization
inline constexpr double parallel_rel = 1e-12;   // line parallel to a facet (degenerate crossing)
inline constexpr double active_facet = 1e-9;    // facet value <= tol after sup normalization
inline constexpr double joint_gap = 1e-9;       // consecutive geodesic legs agree at the joint
inline constexpr double eval_slack = 1e-12;     // parameter clamp slack for path evaluation
inline constexpr double witness_eq = 1e-8;      // midpoint equalities for certified witnesses
inline constexpr double off_path = 1e-4;        // sup distance from the canonical path, normalized
inline constexpr double oracle_defect = 1e-9;   // |d(x,w)+d(w,y)-d(x,y)| accepted by the oracle
}  // namespace tol

inline double sup_norm(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

// x and y equal up to tolerance, relative to the larger sup norm.
inline bool approx_equal_points(const Point& x, const Point& y, double rel_tol) {
  const double scale = std::max(sup_norm(x), sup_norm(y));
  if (scale == 0.0) return true;
  return sup_norm(x - y) <= rel_tol * scale;
}

// Positive multiples of each other (same ray), after sup-norm normalization.
inline bool same_ray(const Point& x, const Point& y, double rel_tol) {
  const double sx = sup_norm(x), sy = sup_norm(y);
  if (sx == 0.0 || sy == 0.0) return sx == sy;
  return sup_norm(x / sx - y / sy) <= rel_tol;
}

// sin of the angle between x and y seen as plain vectors; 0 for parallel.
inline double direction_sin(const Vector& x, const Vector& y) {
  const double nx = x.norm(), ny = y.norm();
  if (nx == 0.0 || ny == 0.0) return 0.0;
  const double c = x.dot(y) / (nx * ny);
  const Vector perp = y / ny - c * (x / nx);
  return perp.norm();
}

inline Matrix to_sym_matrix(const Point& p, int k) {
  if (p.size() != static_cast<Eigen::Index>(k) * k)
    throw invalid_input("matrix point has wrong length for order " + std::to_string(k));
  Matrix a(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a(i, j) = p(i * k + j);
  return a;
}

inline Point from_sym_matrix(const Matrix& a) {
  Point p(a.rows() * a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) p(i * a.cols() + j) = a(i, j);
  return p;
}

}  // namespace conegeo
