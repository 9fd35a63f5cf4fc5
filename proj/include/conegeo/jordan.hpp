#pragma once

#include "conegeo/cone.hpp"

#include <vector>

namespace conegeo {

// Spectral decomposition x = sum_i lambda_i c_i over a complete orthogonal
// system of idempotents: c_i o c_i = c_i, c_i o c_j = 0 (i != j),
// sum_i c_i = e.  Eigenvalues are ascending and distinct after clustering
// (relative gap <= tol::cluster_rel merged).
struct SpectralDecomp {
  std::vector<double> eigenvalues;
  std::vector<Point> idempotents;
};

// The three Euclidean Jordan algebras backing the symmetric-cone families:
//   orthant(n): componentwise product on R^n
//   sym(k):     x o y = (xy + yx)/2 on symmetric k x k matrices
//   spin(m):    (s,u) o (t,v) = (st + <u,v>, sv + tu) on R x R^{m-1}
class JordanAlgebra {
 public:
  enum class Family { orthant, sym, spin };

  static JordanAlgebra Orthant(int n);
  static JordanAlgebra Sym(int order);
  static JordanAlgebra Spin(int ambient_dim);
  // Algebra whose cone of squares is the given cone.  Throws for general
  // polyhedral cones.
  static JordanAlgebra ForCone(const ConeSpec& cone);

  Family family() const { return family_; }
  // Length of the coordinate vectors (sym: order^2, row-major).
  int dim() const { return dim_; }
  int order() const { return order_; }
  // Rank of the algebra: number of eigenvalues with multiplicity.
  int rank() const;

  Point unit() const;
  Point product(const Point& a, const Point& b) const;

  // L(a), the dense matrix of b -> a o b.
  Matrix lmul(const Point& a) const;
  // Quadratic representation P(a) = 2 L(a)^2 - L(a^2) as a dense matrix.
  Matrix quadratic_rep(const Point& a) const;
  // P(a) z without forming the matrix (sym: a z a; spin closed form).
  Point apply_quadratic(const Point& a, const Point& z) const;

  SpectralDecomp spectral(const Point& x) const;
  // sum_i lambda_i^p c_i.  Throws invalid_input when an eigenvalue is <= 0
  // and p is not a nonnegative integer.
  Point power(const Point& x, double p) const;

  // Clustered ascending eigenvalues of P(y^{-1/2}) x; requires both spectra
  // strictly positive (interior points).
  std::vector<double> relative_spectrum(const Point& x, const Point& y) const;
  // Largest eigenvalue of P(y^{-1/2}) x, i.e. the order ratio M(x/y).
  // Computed without extracting small eigenvalues, so it stays accurate for
  // near-boundary inputs.
  double max_relative_eigenvalue(const Point& x, const Point& y) const;

 private:
  JordanAlgebra(Family f, int dim, int order) : family_(f), dim_(dim), order_(order) {}
  void check_dim(const Point& p, const char* who) const;

  Family family_;
  int dim_;
  int order_;  // sym: matrix order; spin: ambient; orthant: n
};

// Thompson-metric distance computed inside the algebra:
// log max(lambda_max(P(y^{-1/2})x), lambda_max(P(x^{-1/2})y)).
double jordan_thompson(const JordanAlgebra& alg, const Point& x, const Point& y);

}  // namespace conegeo
