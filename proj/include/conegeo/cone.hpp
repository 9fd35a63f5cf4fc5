#pragma once

#include "conegeo/common.hpp"

namespace conegeo {

// The four supported families of closed, pointed, full-dimensional cones:
//   orthant(n)     nonnegative orthant in R^n
//   polyhedral     {x : F x >= 0} for a facet matrix F (m x n, rank n)
//   lorentz(m)     {(s, w) in R x R^{m-1} : s >= |w|_2}
//   psd(k)         symmetric positive semidefinite k x k matrices
enum class ConeKind { orthant, polyhedral, lorentz, psd };

enum class Region { interior, boundary, outside };

// Classification of a point against a cone.  The margin is a signed distance
// proxy computed after normalizing the point to unit sup norm: the minimum
// facet value for facet-described cones, s - |w|_2 for lorentz, the minimum
// eigenvalue for psd.
struct Membership {
  Region region;
  double margin;
};

class ConeSpec {
 public:
  static ConeSpec Orthant(int n);
  // Throws invalid_input unless a strictly interior point exists; rows must be
  // nonzero and F must have full column rank (pointedness).
  static ConeSpec Polyhedral(Matrix facets);
  static ConeSpec Polyhedral(Matrix facets, Point interior_witness);
  static ConeSpec Lorentz(int ambient_dim);  // ambient_dim >= 2
  static ConeSpec Psd(int order);            // points are order x order matrices

  ConeKind kind() const { return kind_; }
  int ambient_dim() const { return ambient_; }
  // psd: matrix order k (ambient k^2).  Others: ambient dimension.
  int order() const { return order_; }

  bool has_facets() const { return kind_ == ConeKind::orthant || kind_ == ConeKind::polyhedral; }
  // Facet matrix for facet-described cones (identity for the orthant).
  const Matrix& facets() const;

  // Families whose cone is the cone of squares of a Euclidean Jordan algebra
  // we implement: orthant, lorentz, psd.
  bool has_jordan() const { return kind_ != ConeKind::polyhedral; }

  // A canonical strictly interior point: ones / stored witness / (1,0,...) /
  // the identity matrix.
  Point interior_anchor() const;

  // Coordinates of a linear functional strictly positive on the closed cone
  // minus the origin (used to normalize boundary directions).
  Vector positive_functional() const;

 private:
  ConeSpec() = default;
  ConeKind kind_{};
  int ambient_ = 0;
  int order_ = 0;
  Matrix facets_;
  Point witness_;
};

Membership classify(const ConeSpec& cone, const Point& x);

inline bool is_interior(const ConeSpec& cone, const Point& x) {
  return classify(cone, x).region == Region::interior;
}

// Throws invalid_input when x is not strictly interior.
void require_interior(const ConeSpec& cone, const Point& x, const char* who);

}  // namespace conegeo
