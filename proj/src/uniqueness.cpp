#include "conegeo/uniqueness.hpp"

#include "conegeo/metrics.hpp"
#include "conegeo/sampling.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace conegeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Distance evaluator with one endpoint fixed, cheap enough for the oracle's
// inner loop.  Returns +inf for points outside the open cone, which doubles
// as the interiority test.
class FixedBaseDistance {
 public:
  FixedBaseDistance(const ConeSpec& cone, const Point& base) : cone_(&cone) {
    switch (cone.kind()) {
      case ConeKind::orthant:
      case ConeKind::polyhedral:
        log_base_ = (cone.facets() * base).array().log();
        break;
      case ConeKind::psd: {
        const JordanAlgebra alg = JordanAlgebra::ForCone(cone);
        inv_sqrt_mat_ = to_sym_matrix(alg.power(base, -0.5), cone.order());
        break;
      }
      case ConeKind::lorentz: {
        const JordanAlgebra alg = JordanAlgebra::ForCone(cone);
        inv_sqrt_ = alg.power(base, -0.5);
        break;
      }
    }
  }

  double distance(const Point& w) const {
    switch (cone_->kind()) {
      case ConeKind::orthant:
      case ConeKind::polyhedral: {
        const Vector fw = cone_->facets() * w;
        if (fw.minCoeff() <= 0.0) return kInf;
        return (fw.array().log() - log_base_).abs().maxCoeff();
      }
      case ConeKind::psd: {
        const Matrix mw = to_sym_matrix(w, cone_->order());
        const Matrix rel = inv_sqrt_mat_ * (0.5 * (mw + mw.transpose())) * inv_sqrt_mat_;
        Eigen::SelfAdjointEigenSolver<Matrix> es(rel, Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
        if (lo <= 0.0) return kInf;
        return std::max(std::log(hi), -std::log(lo));
      }
      case ConeKind::lorentz: {
        const int n = static_cast<int>(w.size()) - 1;
        const double q = inv_sqrt_(0) * inv_sqrt_(0) - inv_sqrt_.tail(n).squaredNorm();
        Point z = 2.0 * inv_sqrt_.dot(w) * inv_sqrt_;
        z(0) -= q * w(0);
        z.tail(n) += q * w.tail(n);
        const double r = z.tail(n).norm();
        if (z(0) - r <= 0.0) return kInf;
        return std::max(std::log(z(0) + r), -std::log(z(0) - r));
      }
    }
    return kInf;
  }

 private:
  const ConeSpec* cone_;
  Eigen::ArrayXd log_base_;
  Matrix inv_sqrt_mat_;
  Point inv_sqrt_;
};

// Derivative-free Nelder-Mead polish of the midpoint defect around a start
// point.  Small and deterministic; good enough for desk-scale dimensions.
Point nelder_mead(const std::function<double(const Point&)>& f, const Point& start,
                  double scale, int iters) {
  const int n = static_cast<int>(start.size());
  std::vector<Point> xs(n + 1, start);
  std::vector<double> fs(n + 1);
  for (int i = 0; i < n; ++i) xs[i + 1](i) += scale;
  for (int i = 0; i <= n; ++i) fs[i] = f(xs[i]);

  for (int it = 0; it < iters; ++it) {
    std::vector<int> ord(n + 1);
    for (int i = 0; i <= n; ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](int a, int b) { return fs[a] < fs[b]; });
    std::vector<Point> xs2(n + 1);
    std::vector<double> fs2(n + 1);
    for (int i = 0; i <= n; ++i) {
      xs2[i] = xs[ord[i]];
      fs2[i] = fs[ord[i]];
    }
    xs = std::move(xs2);
    fs = std::move(fs2);
    if (fs[0] < 1e-13) break;

    Point centroid = Vector::Zero(n);
    for (int i = 0; i < n; ++i) centroid += xs[i];
    centroid /= n;

    const Point refl = centroid + (centroid - xs[n]);
    const double f_refl = f(refl);
    if (f_refl < fs[0]) {
      const Point expa = centroid + 2.0 * (centroid - xs[n]);
      const double f_expa = f(expa);
      if (f_expa < f_refl) {
        xs[n] = expa;
        fs[n] = f_expa;
      } else {
        xs[n] = refl;
        fs[n] = f_refl;
      }
    } else if (f_refl < fs[n - 1]) {
      xs[n] = refl;
      fs[n] = f_refl;
    } else {
      const Point contr = centroid + 0.5 * (xs[n] - centroid);
      const double f_contr = f(contr);
      if (f_contr < fs[n]) {
        xs[n] = contr;
        fs[n] = f_contr;
      } else {
        for (int i = 1; i <= n; ++i) {
          xs[i] = xs[0] + 0.5 * (xs[i] - xs[0]);
          fs[i] = f(xs[i]);
        }
      }
    }
  }
  int best = 0;
  for (int i = 1; i <= n; ++i)
    if (fs[i] < fs[best]) best = i;
  return xs[best];
}

std::vector<double> orthant_ratio_spectrum(const ConeSpec& cone, const Point& x,
                                           const Point& y) {
  const JordanAlgebra alg = JordanAlgebra::ForCone(cone);
  return alg.relative_spectrum(x, y);
}

int pick_intermediate_index(const std::vector<double>& spectrum) {
  // The middle cluster whose log is smallest in magnitude; deterministic.
  int best = 1;
  for (size_t i = 1; i + 1 < spectrum.size(); ++i)
    if (std::abs(std::log(spectrum[i])) < std::abs(std::log(spectrum[best])))
      best = static_cast<int>(i);
  return best;
}

}  // namespace

double midpoint_defect(const ConeSpec& cone, const Point& x, const Point& y,
                       const Point& w) {
  return thompson_distance(cone, x, w) + thompson_distance(cone, w, y) -
         thompson_distance(cone, x, y);
}

double off_path_distance(const GeodesicPath& path, const Point& w, int samples) {
  if (samples < 1) throw invalid_input("off_path_distance: need at least one sample");
  const double len = path.total_length;
  const auto gap_at = [&](double t) {
    const Point p = path.eval(t);
    return sup_norm(w - p) / std::max(sup_norm(w), sup_norm(p));
  };
  if (len == 0.0) return gap_at(0.0);

  int best_i = 0;
  double best = kInf;
  for (int i = 0; i <= samples; ++i) {
    const double g = gap_at(len * i / samples);
    if (g < best) {
      best = g;
      best_i = i;
    }
  }

  // Golden-section refinement on the bracket around the coarse minimum; the
  // gap is smooth in arclength, so this resolves on-path points to ~0 while
  // the coarse scan already lower-bounds genuine detours.
  double lo = len * std::max(best_i - 1, 0) / samples;
  double hi = len * std::min(best_i + 1, samples) / samples;
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double m1 = hi - phi * (hi - lo), m2 = lo + phi * (hi - lo);
  double f1 = gap_at(m1), f2 = gap_at(m2);
  for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + len); ++it) {
    if (f1 <= f2) {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - phi * (hi - lo);
      f1 = gap_at(m1);
    } else {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + phi * (hi - lo);
      f2 = gap_at(m2);
    }
  }
  return std::min({best, f1, f2});
}

UniquenessVerdict is_unique(const ConeSpec& cone, const Point& x, const Point& y) {
  require_interior(cone, x, "is_unique");
  require_interior(cone, y, "is_unique");
  if (approx_equal_points(x, y, tol::collinear_rel))
    throw invalid_input("is_unique: points coincide");
  if (same_ray(x, y, tol::collinear_rel))
    return {UniqueStatus::unique, UniqueMethod::collinear, std::nullopt, std::nullopt};

  const OrderRatios r = m_ratio(cone, x, y);
  if (std::abs(r.M - 1.0 / r.m) > tol::balanced_rel * r.M) {
    // Both concatenation orders realize d(x,y); the other order's midpoint
    // certifies non-uniqueness.
    const GeodesicPath alt = geodesic_alternative(cone, x, y);
    return {UniqueStatus::non_unique, UniqueMethod::unbalanced,
            alt.eval(0.5 * alt.total_length), std::nullopt};
  }

  if (cone.ambient_dim() == 2)
    return {UniqueStatus::unique, UniqueMethod::two_dim, std::nullopt, std::nullopt};

  if (cone.kind() == ConeKind::lorentz || cone.kind() == ConeKind::psd) {
    const JordanAlgebra alg = JordanAlgebra::ForCone(cone);
    const std::vector<double> rel = alg.relative_spectrum(x, y);
    if (rel.size() == 2) {
      if (std::abs(rel.front() * rel.back() - 1.0) > tol::witness_eq)
        throw numeric_failure("is_unique: balanced pair with asymmetric two-point spectrum");
      return {UniqueStatus::unique, UniqueMethod::spectral, std::nullopt, rel};
    }
    const int idx = pick_intermediate_index(rel);
    return {UniqueStatus::non_unique, UniqueMethod::spectral,
            spectral_witness(alg, x, y, idx), rel};
  }

  return face_span_test(cone, x, y);
}

UniquenessVerdict face_span_test(const ConeSpec& cone, const Point& x, const Point& y) {
  if (!cone.has_facets())
    throw invalid_input("face_span_test: cone has no facet description");
  require_interior(cone, x, "face_span_test");
  require_interior(cone, y, "face_span_test");
  const OrderRatios r = m_ratio(cone, x, y);
  if (std::abs(r.M - 1.0 / r.m) > tol::balanced_rel * r.M)
    throw invalid_input("face_span_test: pair is not balanced");

  const LineBoundary lb = line_boundary_points(cone, x, y);
  if (lb.degenerate())
    throw numeric_failure("face_span_test: degenerate boundary crossing");
  const Matrix& f = cone.facets();
  const int n = cone.ambient_dim();

  const auto active_rows = [&](const Point& p) {
    const Vector vals = f * (p / sup_norm(p));
    std::vector<int> act;
    for (int i = 0; i < vals.size(); ++i)
      if (vals(i) <= tol::active_facet) act.push_back(i);
    return act;
  };
  const std::vector<int> ax = active_rows(*lb.beyond_x);
  const std::vector<int> ay = active_rows(*lb.beyond_y);

  Matrix stacked(ax.size() + ay.size(), n);
  for (size_t i = 0; i < ax.size(); ++i) stacked.row(i) = f.row(ax[i]);
  for (size_t i = 0; i < ay.size(); ++i) stacked.row(ax.size() + i) = f.row(ay[i]);

  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const Vector sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-6 * sv(0)) ++rank;

  std::optional<std::vector<double>> spectrum;
  if (cone.kind() == ConeKind::orthant) spectrum = orthant_ratio_spectrum(cone, x, y);

  if (rank >= n)
    return {UniqueStatus::unique, UniqueMethod::face_span, std::nullopt, spectrum};

  // The faces through x' and y' share a nonzero direction z: translating both
  // boundary points by t z stays on the boundary for small t, so
  // zeta + delta z is an exact alternative midpoint for small delta.
  const Vector z = svd.matrixV().col(n - 1);
  const GeodesicPath path = type_one_path(cone, x, y);
  const Point zeta = path.eval(0.5 * path.total_length);
  const double half = 0.5 * path.total_length;

  for (const double sign : {1.0, -1.0}) {
    double delta = 1e-2 * sup_norm(zeta) / std::max(sup_norm(z), 1e-300);
    for (int halving = 0; halving < 40; ++halving, delta *= 0.5) {
      const Point w = zeta + sign * delta * z;
      if (!is_interior(cone, w)) continue;
      if (std::abs(thompson_distance(cone, x, w) - half) > tol::witness_eq) continue;
      if (std::abs(thompson_distance(cone, w, y) - half) > tol::witness_eq) continue;
      if (off_path_distance(path, w) < tol::off_path) continue;
      return {UniqueStatus::non_unique, UniqueMethod::face_span, w, spectrum};
    }
  }
  throw numeric_failure("face_span_test: witness search exhausted 40 halvings");
}

Point spectral_witness(const JordanAlgebra& alg, const Point& x, const Point& y,
                       int intermediate_index, double epsilon) {
  const Point y_sqrt = alg.power(y, 0.5);
  const Point y_inv_sqrt = alg.power(y, -0.5);
  const Point z = alg.apply_quadratic(y_inv_sqrt, x);
  const SpectralDecomp dz = alg.spectral(z);
  const int k = static_cast<int>(dz.eigenvalues.size());
  if (k < 3) throw invalid_input("spectral_witness: relative spectrum has no intermediate cluster");
  if (intermediate_index <= 0 || intermediate_index >= k - 1)
    throw invalid_input("spectral_witness: index does not name an intermediate cluster");

  const double r = dz.eigenvalues.back();
  const double lam = dz.eigenvalues[intermediate_index];
  if (!(lam > dz.eigenvalues.front() * (1.0 + 1e-6) && lam < r * (1.0 - 1e-6)))
    throw invalid_input("spectral_witness: eigenvalue is not strictly intermediate");
  const Point& c = dz.idempotents[intermediate_index];
  const Point e = alg.unit();
  const double half = 0.5 * std::log(r);

  // eps below both r - lambda and r lambda^2 - lambda keeps (z + eps c)^{1/2}
  // an exact metric midpoint of e and z.
  const double bound = std::min(r - lam, r * lam * lam - lam);
  if (bound <= 0.0) throw numeric_failure("spectral_witness: empty eps interval");
  double eps = epsilon >= 0.0 ? epsilon : std::min(1e-2, 0.5 * bound);
  for (int halving = 0; halving < 40; ++halving, eps *= 0.5) {
    const Point mid = alg.power(z + eps * c, 0.5);
    if (std::abs(jordan_thompson(alg, e, mid) - half) <= tol::witness_eq &&
        std::abs(jordan_thompson(alg, mid, z) - half) <= tol::witness_eq)
      return alg.apply_quadratic(y_sqrt, mid);
    if (epsilon >= 0.0)
      throw numeric_failure("spectral_witness: supplied eps fails the midpoint equalities");
  }
  throw numeric_failure("spectral_witness: eps search exhausted 40 halvings");
}

UniquenessVerdict hilbert_unique(const ConeSpec& cone, const Point& x, const Point& y) {
  require_interior(cone, x, "hilbert_unique");
  require_interior(cone, y, "hilbert_unique");
  if (same_ray(x, y, tol::collinear_rel))
    throw invalid_input("hilbert_unique: points are projectively equal");

  if (cone.kind() == ConeKind::lorentz || cone.kind() == ConeKind::psd) {
    const JordanAlgebra alg = JordanAlgebra::ForCone(cone);
    const std::vector<double> rel = alg.relative_spectrum(x, y);
    if (rel.size() <= 2)
      return {UniqueStatus::unique, UniqueMethod::spectral, std::nullopt, rel};
    // Witness on the balanced representative; projective-distance additivity
    // transfers it to the Hilbert geodesic through [x], [y].
    const double lambda = balance_scale(cone, x, y);
    const int idx = pick_intermediate_index(rel);
    return {UniqueStatus::non_unique, UniqueMethod::spectral,
            spectral_witness(alg, x, Point(lambda * y), idx), rel};
  }

  const double lambda = balance_scale(cone, x, y);
  return face_span_test(cone, x, Point(lambda * y));
}

std::optional<Point> midpoint_oracle(const ConeSpec& cone, const Point& x, const Point& y,
                                     long samples, double radius, std::uint64_t seed) {
  require_interior(cone, x, "midpoint_oracle");
  require_interior(cone, y, "midpoint_oracle");
  if (radius < 1e-4) throw invalid_input("midpoint_oracle: radius below the 1e-4 floor");

  const GeodesicPath path = geodesic(cone, x, y);
  if (path.total_length == 0.0) return std::nullopt;
  const Point zeta = path.eval(0.5 * path.total_length);

  const FixedBaseDistance from_x(cone, x), from_y(cone, y);
  const double dxy = thompson_distance(cone, x, y);
  // On matrix cones the metric only sees the symmetric part of a flat point,
  // so candidates are pinned back onto the symmetric subspace before any
  // acceptance test; otherwise antisymmetric drift from the polish step would
  // fake off-path separation and trip the membership symmetry gate.
  const auto canon = [&](const Point& w) -> Point {
    if (cone.kind() != ConeKind::psd) return w;
    const Matrix m = to_sym_matrix(w, cone.order());
    return from_sym_matrix(0.5 * (m + m.transpose()));
  };
  const auto defect = [&](const Point& w) {
    const double a = from_x.distance(w);
    if (a == kInf) return kInf;
    const double b = from_y.distance(w);
    if (b == kInf) return kInf;
    return std::abs(a + b - dxy);
  };
  // Full-precision re-check used before anything is returned.
  const auto accept = [&](const Point& w) {
    return is_interior(cone, w) &&
           std::abs(midpoint_defect(cone, x, y, w)) <= tol::oracle_defect &&
           off_path_distance(path, w) >= tol::off_path;
  };

  Rng rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double lo = std::log(1e-4), hi = std::log(radius);

  struct Candidate {
    double defect;
    Point w;
  };
  std::vector<Candidate> best;
  constexpr size_t kKeep = 16;

  for (long i = 0; i < samples; ++i) {
    const Point u = sample_direction(cone, rng);
    const double delta = std::exp(lo + (hi - lo) * u01(rng));
    const Point w = zeta + delta * u;
    const double d = defect(w);
    if (d == kInf) continue;
    if (d <= tol::oracle_defect && accept(w)) return w;
    if (best.size() < kKeep || d < best.back().defect) {
      best.push_back({d, w});
      std::sort(best.begin(), best.end(),
                [](const Candidate& a, const Candidate& b) { return a.defect < b.defect; });
      if (best.size() > kKeep) best.pop_back();
    }
  }

  // Polish the most promising samples: the zero-defect set has measure zero,
  // so raw samples land near it at best.
  for (const Candidate& c : best) {
    const double scale = 0.05 * sup_norm(zeta);
    const Point refined = canon(nelder_mead(defect, c.w, scale, 220));
    if (defect(refined) <= tol::oracle_defect && accept(refined)) return refined;
  }
  return std::nullopt;
}

}  // namespace conegeo
