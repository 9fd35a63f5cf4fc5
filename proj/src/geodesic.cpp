#include "conegeo/geodesic.hpp"

#include "conegeo/metrics.hpp"

#include <cmath>

namespace conegeo {

double leg_length(const GeodesicLeg& leg) {
  return std::visit([](const auto& l) { return l.t_end - l.t_start; }, leg);
}

Point leg_eval(const GeodesicLeg& leg, double s) {
  if (const auto* one = std::get_if<TypeOneLeg>(&leg)) {
    const double t = one->t_start + s;
    return one->alpha * (std::exp(t) * one->u + std::exp(-t) * one->v);
  }
  const auto& two = std::get<TypeTwoLeg>(leg);
  return std::exp(two.log_rate * s) * two.base;
}

Point GeodesicPath::eval(double s) const {
  if (s < -tol::eval_slack || s > total_length + tol::eval_slack)
    throw invalid_input("eval: parameter outside [0, total_length]");
  s = std::clamp(s, 0.0, total_length);
  if (legs.empty()) throw invalid_input("eval: empty path");
  for (size_t i = 0; i + 1 < legs.size(); ++i) {
    const double len = leg_length(legs[i]);
    if (s <= len) return leg_eval(legs[i], s);
    s -= len;
  }
  return leg_eval(legs.back(), std::min(s, leg_length(legs.back())));
}

double balance_scale(const ConeSpec& cone, const Point& x, const Point& y) {
  const OrderRatios r = m_ratio(cone, x, y);
  return std::sqrt(r.M * r.m);  // sqrt(M(x/y)/M(y/x))
}

GeodesicPath type_one_path(const ConeSpec& cone, const Point& x, const Point& y) {
  const OrderRatios r = m_ratio(cone, x, y);
  const double M_back = 1.0 / r.m;  // M(y/x)
  if (std::abs(r.M - M_back) > tol::balanced_rel * r.M)
    throw invalid_input("type_one_path: pair is not balanced; use geodesic()");

  const LineBoundary lb = line_boundary_points(cone, x, y);
  if (lb.degenerate())
    throw numeric_failure("type_one_path: balanced pair produced a degenerate crossing");
  const Point u = *lb.beyond_x / sup_norm(*lb.beyond_x);
  const Point v = *lb.beyond_y / sup_norm(*lb.beyond_y);

  // x = a u + b v and y = a' u + b' v in the section plane; then
  // gamma(t) = alpha (e^t u + e^{-t} v) with alpha = sqrt(ab) passes through
  // x at t = log(a/b)/2 and through y at t = log(a'/b')/2.
  Matrix basis(cone.ambient_dim(), 2);
  basis.col(0) = u;
  basis.col(1) = v;
  const auto solver = basis.colPivHouseholderQr();
  const Vector cx = solver.solve(x);
  const Vector cy = solver.solve(y);
  if (cx.minCoeff() <= 0.0 || cy.minCoeff() <= 0.0)
    throw numeric_failure("type_one_path: section coordinates not positive");

  const double alpha = std::sqrt(cx(0) * cx(1));
  const double tx = 0.5 * std::log(cx(0) / cx(1));
  const double ty = 0.5 * std::log(cy(0) / cy(1));

  TypeOneLeg leg;
  if (tx <= ty) {
    leg = {u, v, alpha, tx, ty};
  } else {
    // Swap the boundary directions to flip the orientation:
    // alpha (e^t v + e^{-t} u) at -t equals the original at t.
    leg = {v, u, alpha, -tx, -ty};
  }
  GeodesicPath path;
  path.total_length = leg.t_end - leg.t_start;
  path.legs.push_back(std::move(leg));
  return path;
}

GeodesicPath type_two_path(const ConeSpec& cone, const Point& x, double lambda) {
  require_interior(cone, x, "type_two_path");
  if (lambda <= 0.0) throw invalid_input("type_two_path: scale must be positive");
  const double len = std::abs(std::log(lambda));
  TypeTwoLeg leg{x, len == 0.0 ? 0.0 : (lambda > 1.0 ? 1.0 : -1.0), 0.0, len};
  GeodesicPath path;
  path.total_length = len;
  path.legs.push_back(std::move(leg));
  return path;
}

namespace {

double ray_factor(const Point& x, const Point& y) {
  return x.dot(y) / x.dot(x);  // least-squares scale of y onto the ray of x
}

}  // namespace

GeodesicPath geodesic(const ConeSpec& cone, const Point& x, const Point& y) {
  require_interior(cone, x, "geodesic");
  require_interior(cone, y, "geodesic");
  if (approx_equal_points(x, y, tol::collinear_rel)) return type_two_path(cone, x, 1.0);
  if (same_ray(x, y, tol::collinear_rel)) return type_two_path(cone, x, ray_factor(x, y));

  const OrderRatios r = m_ratio(cone, x, y);
  if (std::abs(r.M - 1.0 / r.m) <= tol::balanced_rel * r.M) return type_one_path(cone, x, y);

  const double lambda = std::sqrt(r.M * r.m);
  GeodesicPath path = type_one_path(cone, x, lambda * y);
  GeodesicPath tail = type_two_path(cone, lambda * y, 1.0 / lambda);
  path.legs.push_back(std::move(tail.legs.front()));
  path.total_length += tail.total_length;
  return path;
}

GeodesicPath geodesic_alternative(const ConeSpec& cone, const Point& x, const Point& y) {
  require_interior(cone, x, "geodesic_alternative");
  require_interior(cone, y, "geodesic_alternative");
  if (same_ray(x, y, tol::collinear_rel) ||
      approx_equal_points(x, y, tol::collinear_rel))
    return geodesic(cone, x, y);
  const OrderRatios r = m_ratio(cone, x, y);
  if (std::abs(r.M - 1.0 / r.m) <= tol::balanced_rel * r.M) return type_one_path(cone, x, y);

  // Ray first: x -> x/lambda, then a type I leg; (x/lambda, y) is balanced.
  const double lambda = std::sqrt(r.M * r.m);
  GeodesicPath path = type_two_path(cone, x, 1.0 / lambda);
  GeodesicPath tail = type_one_path(cone, x / lambda, y);
  path.legs.push_back(std::move(tail.legs.front()));
  path.total_length += tail.total_length;
  return path;
}

}  // namespace conegeo
