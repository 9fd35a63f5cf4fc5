#include "conegeo/metrics.hpp"

#include "conegeo/jordan.hpp"

#include <cmath>

namespace conegeo {

OrderRatios m_ratio(const ConeSpec& cone, const Point& x, const Point& y) {
  require_interior(cone, x, "m_ratio");
  require_interior(cone, y, "m_ratio");
  if (cone.has_facets()) {
    const Vector fx = cone.facets() * x, fy = cone.facets() * y;
    const Vector r = fx.cwiseQuotient(fy);
    return {r.maxCoeff(), r.minCoeff()};
  }
  const JordanAlgebra alg = JordanAlgebra::ForCone(cone);
  const std::vector<double> rel = alg.relative_spectrum(x, y);
  return {rel.back(), rel.front()};
}

double thompson_distance(const ConeSpec& cone, const Point& x, const Point& y) {
  require_interior(cone, x, "thompson_distance");
  require_interior(cone, y, "thompson_distance");
  if (cone.has_facets()) {
    const Vector fx = cone.facets() * x, fy = cone.facets() * y;
    const Vector r = fx.cwiseQuotient(fy);
    return std::log(std::max(r.maxCoeff(), 1.0 / r.minCoeff()));
  }
  // Two one-sided top eigenvalues instead of a top/bottom pair: the bottom
  // eigenvalue of the relative element degrades near the boundary.
  return jordan_thompson(JordanAlgebra::ForCone(cone), x, y);
}

double hilbert_distance(const ConeSpec& cone, const Point& x, const Point& y) {
  require_interior(cone, x, "hilbert_distance");
  require_interior(cone, y, "hilbert_distance");
  if (cone.has_facets()) {
    const Vector fx = cone.facets() * x, fy = cone.facets() * y;
    const Vector r = fx.cwiseQuotient(fy);
    return std::log(r.maxCoeff() / r.minCoeff());
  }
  const JordanAlgebra alg = JordanAlgebra::ForCone(cone);
  return std::log(alg.max_relative_eigenvalue(x, y) * alg.max_relative_eigenvalue(y, x));
}

LineBoundary line_boundary_points(const ConeSpec& cone, const Point& x, const Point& y) {
  require_interior(cone, x, "line_boundary_points");
  require_interior(cone, y, "line_boundary_points");
  if (direction_sin(x, y) < 1e-9)
    throw invalid_input("line_boundary_points: points are collinear");
  const OrderRatios r = m_ratio(cone, x, y);

  LineBoundary out;
  // The segment {(1-t)x + ty} extends to t < 0 until x - s y leaves the cone
  // at s = m(x/y), provided m < 1; and to t > 1 until u y - x enters at
  // u = M(x/y), provided M > 1.  m >= 1 (or M <= 1) means the escape
  // direction lies in the cone: no crossing on that side.
  if (r.m < 1.0 - tol::parallel_rel) out.beyond_x = (x - r.m * y) / (1.0 - r.m);
  if (r.M > 1.0 + tol::parallel_rel) out.beyond_y = (r.M * y - x) / (r.M - 1.0);
  return out;
}

double cross_ratio_distance(const ConeSpec& cone, const Point& x, const Point& y,
                            const Vector& phi) {
  require_interior(cone, x, "cross_ratio_distance");
  require_interior(cone, y, "cross_ratio_distance");
  if (phi.size() != cone.ambient_dim())
    throw invalid_input("cross_ratio_distance: functional has wrong dimension");
  if (same_ray(x, y, tol::collinear_rel)) return 0.0;

  const LineBoundary lb = line_boundary_points(cone, x, y);
  if (lb.degenerate()) return hilbert_distance(cone, x, y);

  const auto section = [&](const Point& p) {
    const double v = phi.dot(p);
    if (v <= 0.0)
      throw invalid_input("cross_ratio_distance: functional is not positive on the chord");
    return Point(p / v);
  };
  const Point sx = section(x), sy = section(y);
  const Point bx = section(*lb.beyond_x), by = section(*lb.beyond_y);
  return std::log(((bx - sy).norm() / (bx - sx).norm()) *
                  ((by - sx).norm() / (by - sy).norm()));
}

}  // namespace conegeo
