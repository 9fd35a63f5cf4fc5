#include "conegeo/sampling.hpp"

#include "conegeo/metrics.hpp"

#include <cmath>

namespace conegeo {

namespace {

Vector gaussian(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = g(rng);
  return v;
}

double log_uniform(double lo_log, double hi_log, Rng& rng) {
  std::uniform_real_distribution<double> u(lo_log, hi_log);
  return std::exp(u(rng));
}

}  // namespace

Matrix random_orthogonal(int n, Rng& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) g.row(i) = gaussian(n, rng).transpose();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

Matrix random_spd(int order, double log_range, Rng& rng) {
  const Matrix q = random_orthogonal(order, rng);
  Vector lam(order);
  for (int i = 0; i < order; ++i) lam(i) = log_uniform(-log_range, log_range, rng);
  return q * lam.asDiagonal() * q.transpose();
}

Point sample_interior(const ConeSpec& cone, Rng& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  switch (cone.kind()) {
    case ConeKind::orthant: {
      Point x(cone.ambient_dim());
      for (int i = 0; i < x.size(); ++i) x(i) = log_uniform(-1.5, 1.5, rng);
      return x;
    }
    case ConeKind::polyhedral: {
      // Ball around the stored witness, radius limited by its Euclidean
      // safety margin, then a log-uniform radial rescale.
      const Point w = cone.interior_anchor();
      const Matrix& f = cone.facets();
      double margin = std::numeric_limits<double>::infinity();
      for (int i = 0; i < f.rows(); ++i)
        margin = std::min(margin, f.row(i).dot(w) / f.row(i).norm());
      const Vector dir = gaussian(cone.ambient_dim(), rng).normalized();
      const Point x = w + (0.85 * margin * u01(rng)) * dir;
      return x * log_uniform(-1.0, 1.0, rng);
    }
    case ConeKind::lorentz: {
      const int n = cone.ambient_dim() - 1;
      const double s = log_uniform(-1.0, 1.0, rng);
      Point x(cone.ambient_dim());
      x(0) = s;
      x.tail(n) = (0.9 * s * u01(rng)) * gaussian(n, rng).normalized();
      return x;
    }
    case ConeKind::psd:
      return from_sym_matrix(random_spd(cone.order(), 1.2, rng));
  }
  throw invalid_input("unknown cone kind");
}

Point sample_direction(const ConeSpec& cone, Rng& rng) {
  if (cone.kind() == ConeKind::psd) {
    const int k = cone.order();
    Matrix g(k, k);
    std::normal_distribution<double> n01(0.0, 1.0);
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) g(i, j) = g(j, i) = n01(rng);
    Point d = from_sym_matrix(g);
    return d / d.norm();
  }
  return gaussian(cone.ambient_dim(), rng).normalized();
}

Point sample_boundary(const ConeSpec& cone, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, cone.ambient_dim() - 1);
  switch (cone.kind()) {
    case ConeKind::orthant: {
      Point x = sample_interior(cone, rng);
      x(pick(rng)) = 0.0;
      return x;
    }
    case ConeKind::polyhedral: {
      // Walk from an interior point toward a random facet; retry if another
      // facet is crossed first.
      const Matrix& f = cone.facets();
      std::uniform_int_distribution<int> facet(0, static_cast<int>(f.rows()) - 1);
      for (int attempt = 0; attempt < 64; ++attempt) {
        const Point x = sample_interior(cone, rng);
        const int i = facet(rng);
        const Vector row = f.row(i).transpose();
        const Point b = x - (f.row(i).dot(x) / row.squaredNorm()) * row;
        if (classify(cone, b).region == Region::boundary) return b;
      }
      throw numeric_failure("sample_boundary: could not land on a single facet");
    }
    case ConeKind::lorentz: {
      const int n = cone.ambient_dim() - 1;
      Point x(cone.ambient_dim());
      x(0) = 1.0;
      x.tail(n) = gaussian(n, rng).normalized();
      return x;
    }
    case ConeKind::psd: {
      const int k = cone.order();
      const Matrix q = random_orthogonal(k, rng);
      Vector lam(k);
      for (int i = 0; i < k; ++i) lam(i) = log_uniform(-1.0, 1.0, rng);
      lam(0) = 0.0;
      return from_sym_matrix(q * lam.asDiagonal() * q.transpose());
    }
  }
  throw invalid_input("unknown cone kind");
}

std::pair<Point, Point> sample_balanced_pair(const ConeSpec& cone, Rng& rng) {
  const Point x = sample_interior(cone, rng);
  Point y = sample_interior(cone, rng);
  const OrderRatios r = m_ratio(cone, x, y);
  // Rescaling y by sqrt(M(x/y)/M(y/x)) equalizes the two ratios exactly.
  y *= std::sqrt(r.M * r.m);
  return {x, y};
}

}  // namespace conegeo
