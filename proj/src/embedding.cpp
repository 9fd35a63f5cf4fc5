#include "conegeo/embedding.hpp"

#include "conegeo/jordan.hpp"
#include "conegeo/metrics.hpp"
#include "conegeo/sampling.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <iostream>

namespace conegeo {

LogEmbedding::LogEmbedding(const ConeSpec& cone)
    : facets(cone.facets()), target_dim(static_cast<int>(cone.facets().rows())) {
  if (cone.kind() != ConeKind::polyhedral) return;
  // Redundant rows never decide a distance: warn (not fail) when a row fails
  // to attain the extreme log-ratio for any sampled pair.
  Rng rng(0x5eedULL);
  std::vector<bool> attained(facets.rows(), false);
  for (int trial = 0; trial < 256; ++trial) {
    const Point x = sample_interior(cone, rng);
    const Point y = sample_interior(cone, rng);
    const Vector ratio = (facets * x).array() / (facets * y).array();
    int arg_max = 0, arg_min = 0;
    ratio.maxCoeff(&arg_max);
    ratio.minCoeff(&arg_min);
    attained[arg_max] = attained[arg_min] = true;
  }
  for (int i = 0; i < static_cast<int>(attained.size()); ++i)
    if (!attained[i])
      std::cerr << "warning: facet row " << i + 1
                << " never attains the extreme ratio; it may be redundant\n";
}

Vector LogEmbedding::apply(const Point& x) const {
  const Vector vals = facets * x;
  if (vals.minCoeff() <= 0.0)
    throw invalid_input("log_embed: point is not in the open cone");
  return vals.array().log();
}

Vector log_embed(const ConeSpec& cone, const Point& x) {
  return LogEmbedding(cone).apply(x);
}

Vector SimplicialMap::map(const Point& x) const {
  const Vector c = to_coords * x;
  if (c.minCoeff() <= 0.0)
    throw invalid_input("simplicial map: point is not in the open cone");
  return c.array().log();
}

Point SimplicialMap::unmap(const Vector& v) const { return basis * v.array().exp().matrix(); }

SimplicialMap simplicial_isometry(const Matrix& basis) {
  if (basis.rows() != basis.cols())
    throw invalid_input("simplicial_isometry: basis must be square");
  Eigen::JacobiSVD<Matrix> svd(basis);
  const double lo = svd.singularValues().minCoeff();
  const double hi = svd.singularValues().maxCoeff();
  if (lo <= 1e-13 * hi) throw invalid_input("simplicial_isometry: basis is singular");
  return {basis, basis.inverse(), hi / lo};
}

double gromov_product(const ConeSpec& cone, const Point& p, const Point& x,
                      const Point& y, double eta) {
  return 0.5 * (thompson_distance(cone, x, p) + thompson_distance(cone, y, p) -
                eta * thompson_distance(cone, x, y));
}

SectionChord::SectionChord(const ConeSpec& cone, const Point& p, const Point& w)
    : w_(w), p_(p) {
  require_interior(cone, p, "SectionChord");
  if (classify(cone, w).region != Region::boundary)
    throw invalid_input("SectionChord: direction is not a boundary point");

  // Find the second boundary ray of the planar section span{w, p} by
  // bisecting the membership margin over the angle.  The section of a closed
  // pointed cone by a plane through its interior is a two-ray cone with w on
  // one boundary ray.
  const Vector q1 = w / w.norm();
  Vector q2 = p - q1.dot(p) * q1;
  if (q2.norm() == 0.0) throw invalid_input("SectionChord: direction is collinear with base");
  q2.normalize();
  const auto dir = [&](double theta) {
    return Point(std::cos(theta) * q1 + std::sin(theta) * q2);
  };
  const auto margin = [&](double theta) { return classify(cone, dir(theta)).margin; };

  const double theta_p = std::atan2(q2.dot(p), q1.dot(p));  // in (0, pi)
  double inside = theta_p, outside = theta_p;
  const double step = M_PI / 64.0;
  while (margin(outside) >= 0.0) {
    inside = outside;
    outside += step;
    if (outside > theta_p + M_PI)
      throw numeric_failure("SectionChord: no far boundary ray found");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (inside + outside);
    (margin(mid) >= 0.0 ? inside : outside) = mid;
  }
  const Point v = dir(inside);

  // p = pw w + pv v in the plane.
  Eigen::Matrix2d a;
  a << q1.dot(w), q1.dot(v), q2.dot(w), q2.dot(v);
  const Eigen::Vector2d rhs(q1.dot(p), q2.dot(p));
  const Eigen::Vector2d c = a.colPivHouseholderQr().solve(rhs);
  pw_ = c(0);
  pv_ = c(1);
  if (pw_ <= 0.0 || pv_ <= 0.0)
    throw numeric_failure("SectionChord: base has non-positive section coordinates");
}

double SectionChord::distance(double u) const {
  if (u <= 0.0 || u > 1.0) throw invalid_input("SectionChord: u outside (0, 1]");
  // x(u) = (1-u) w + u p = ((1-u) + u pw) w + (u pv) v; Thompson distance in a
  // two-ray cone is the max of the coordinate log-ratios against p = (pw, pv).
  const double a = (1.0 - u) + u * pw_;
  return std::max(std::abs(std::log(a / pw_)), std::abs(std::log(u)));
}

Point SectionChord::point(double u) const { return w_ + u * (p_ - w_); }

std::vector<std::vector<BoundarySample>> boundary_sequences(
    const ConeSpec& cone, const Point& p, const std::vector<Point>& directions,
    int k_max) {
  require_interior(cone, p, "boundary_sequences");
  if (directions.size() < 2)
    throw invalid_input("boundary_sequences: need at least two directions");
  if (k_max < 1) throw invalid_input("boundary_sequences: k_max must be >= 1");

  const Vector phi = cone.positive_functional();
  std::vector<Point> ws;
  for (const Point& d : directions) {
    const double v = phi.dot(d);
    if (v <= 0.0)
      throw invalid_input("boundary_sequences: direction not positive under the functional");
    Point w = d / v;
    if (classify(cone, w).region != Region::boundary)
      throw invalid_input("boundary_sequences: direction is not a boundary point");
    ws.push_back(std::move(w));
  }
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = i + 1; j < ws.size(); ++j)
      if (!is_interior(cone, 0.5 * (ws[i] + ws[j])))
        throw invalid_input("boundary_sequences: a chord midpoint is not interior");

  std::vector<std::vector<BoundarySample>> out;
  for (const Point& w : ws) {
    const SectionChord chord(cone, p, w);
    std::vector<BoundarySample> seq;
    double u_inside = 1.0;  // d(x(1), p) = 0 < k
    for (int k = 1; k <= k_max; ++k) {
      // March toward the boundary (u -> 0) until the distance brackets k,
      // then bisect in log u; the distance is strictly increasing as u drops.
      double u_beyond = u_inside;
      while (chord.distance(u_beyond) < k) {
        u_beyond *= 0.25;
        if (u_beyond < 1e-280)
          throw numeric_failure("boundary_sequences: distance never reached k=" +
                                std::to_string(k) + " (max " +
                                std::to_string(chord.distance(1e-280 * 4)) + ")");
      }
      double lo = std::log(u_beyond), hi = std::log(u_inside);
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (chord.distance(std::exp(mid)) >= k ? lo : hi) = mid;
      }
      const double u = std::exp(0.5 * (lo + hi));
      const double d = chord.distance(u);
      if (std::abs(d - k) > 1e-10)
        throw numeric_failure("boundary_sequences: bisection stalled at |d-k|=" +
                              std::to_string(std::abs(d - k)));
      seq.push_back({chord.point(u), 1.0 - u, d});
      u_inside = u;
    }
    out.push_back(std::move(seq));
  }
  return out;
}

GromovSeries gromov_series(const ConeSpec& cone, const Point& p, const Point& w1,
                           const Point& w2, double eta, int k_max) {
  auto seqs = boundary_sequences(cone, p, {w1, w2}, k_max);
  GromovSeries out{p, std::move(seqs[0]), std::move(seqs[1]), eta, {}};
  // Deep terms sit within e^{-k} of the boundary, below the interior
  // classifier's cutoff, yet are interior by construction (u > 0 in exact
  // section coordinates).  Evaluate the cross distances directly instead of
  // going through the gated public entry point.
  const auto cross_distance = [&](const Point& a, const Point& b) {
    if (cone.has_facets()) {
      const Vector fa = cone.facets() * a, fb = cone.facets() * b;
      const Vector r = fa.cwiseQuotient(fb);
      return std::log(std::max(r.maxCoeff(), 1.0 / r.minCoeff()));
    }
    return jordan_thompson(JordanAlgebra::ForCone(cone), a, b);
  };
  for (int k = 0; k < k_max; ++k) {
    const double cross = cross_distance(out.seq_x[k].x, out.seq_y[k].x);
    out.values.push_back(
        0.5 * (out.seq_x[k].distance + out.seq_y[k].distance - eta * cross));
  }
  return out;
}

}  // namespace conegeo
