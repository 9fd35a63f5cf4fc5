#include "conegeo/isometry.hpp"

#include "conegeo/jordan.hpp"
#include "conegeo/metrics.hpp"
#include "conegeo/sampling.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace conegeo {

namespace {

constexpr std::uint64_t kValidationSeed = 0x5eedULL;
constexpr int kValidationSamples = 100;

}  // namespace

ConeMap ConeMap::Linear(const ConeSpec& cone, Matrix a) {
  if (a.rows() != cone.ambient_dim() || a.cols() != cone.ambient_dim())
    throw invalid_input("linear map must be square of the ambient dimension");
  ConeMap map(cone);
  map.kind_ = Kind::linear;
  map.a_ = std::move(a);
  map.validate();
  return map;
}

ConeMap ConeMap::Congruence(const ConeSpec& cone, Point g) {
  if (!cone.has_jordan())
    throw invalid_input("congruence maps need a symmetric cone");
  require_interior(cone, g, "congruence parameter");
  ConeMap map(cone);
  map.kind_ = Kind::congruence;
  map.g_ = std::move(g);
  map.validate();
  return map;
}

ConeMap ConeMap::Inversion(const ConeSpec& cone) {
  if (!cone.has_jordan())
    throw invalid_input("inversion needs a symmetric cone");
  ConeMap map(cone);
  map.kind_ = Kind::inversion;
  map.validate();
  return map;
}

ConeMap ConeMap::PartialInversion(const ConeSpec& cone, int coordinate) {
  if (cone.kind() != ConeKind::orthant)
    throw invalid_input("partial inversion is only defined on the orthant");
  if (coordinate < 0 || coordinate >= cone.ambient_dim())
    throw invalid_input("partial inversion coordinate out of range");
  ConeMap map(cone);
  map.kind_ = Kind::partial_inversion;
  map.coordinate_ = coordinate;
  map.validate();
  return map;
}

ConeMap ConeMap::Composite(const ConeSpec& cone, std::vector<ConeMap> maps) {
  if (maps.empty()) throw invalid_input("composite map needs at least one part");
  for (const ConeMap& part : maps)
    if (part.cone().ambient_dim() != cone.ambient_dim())
      throw invalid_input("composite parts live on mismatched ambient spaces");
  ConeMap map(cone);
  map.kind_ = Kind::composite;
  map.parts_ = std::move(maps);
  map.validate();
  return map;
}

Point ConeMap::apply(const Point& x) const {
  switch (kind_) {
    case Kind::linear:
      return a_ * x;
    case Kind::congruence:
      return JordanAlgebra::ForCone(cone_).apply_quadratic(g_, x);
    case Kind::inversion:
      return JordanAlgebra::ForCone(cone_).power(x, -1.0);
    case Kind::partial_inversion: {
      Point y = x;
      y[coordinate_] = 1.0 / y[coordinate_];
      return y;
    }
    case Kind::composite: {
      Point y = x;
      for (const ConeMap& part : parts_) y = part.apply(y);
      return y;
    }
  }
  throw numeric_failure("unreachable map kind");
}

void ConeMap::validate() const {
  Rng rng(kValidationSeed);
  for (int i = 0; i < kValidationSamples; ++i) {
    Point x = sample_interior(cone_, rng);
    Membership hit = classify(cone_, apply(x));
    if (hit.region != Region::interior)
      throw invalid_input("map does not keep the cone interior invariant");
  }
}

double check_isometry(const ConeMap& map, int samples, std::uint64_t seed) {
  if (samples <= 0) throw invalid_input("sample count must be positive");
  const ConeSpec& cone = map.cone();
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    Point x = sample_interior(cone, rng);
    Point y = sample_interior(cone, rng);
    double before = thompson_distance(cone, x, y);
    double after = thompson_distance(cone, map.apply(x), map.apply(y));
    worst = std::max(worst, std::abs(after - before));
  }
  return worst;
}

namespace {

// Least-squares fit of T with T x_i parallel to f(x_i).  Samples from a
// matrix cone span only the symmetric-coefficient subspace of the ambient
// space, so an unrestricted fit over vec(T) has a fat null space.  Restrict
// to the span of the inputs instead: with P an orthonormal basis of that
// span, solve for B = T P from the stacked constraints
// (I - y y^T) B (P^T x_i) = 0 and report T = B P^T, which annihilates the
// unsampled complement.
Matrix fit_projective_candidate(const ConeMap& map, int fit_samples, Rng& rng,
                                double* gap_ratio) {
  const ConeSpec& cone = map.cone();
  const int n = cone.ambient_dim();
  std::vector<Point> xs(fit_samples), ys(fit_samples);
  Matrix stacked(fit_samples, n);
  for (int i = 0; i < fit_samples; ++i) {
    xs[i] = sample_interior(cone, rng);
    ys[i] = map.apply(xs[i]);
    ys[i] /= ys[i].norm();
    stacked.row(i) = xs[i].transpose() / xs[i].norm();
  }
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-10 * sv(0)) ++r;
  if (r < 1) throw numeric_failure("linearity fit saw only zero samples");
  const Matrix basis = svd.matrixV().leftCols(r);

  Matrix gram = Matrix::Zero(n * r, n * r);
  Matrix rows(n, n * r);
  for (int i = 0; i < fit_samples; ++i) {
    const Matrix proj = Matrix::Identity(n, n) - ys[i] * ys[i].transpose();
    const Vector u = basis.transpose() * xs[i];
    // (B u)_a = sum_b u_b B_ab and vec index of B_ab is a + n b.
    for (int b = 0; b < r; ++b) rows.middleCols(b * n, n) = u[b] * proj;
    gram.noalias() += rows.transpose() * rows;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  if (eig.info() != Eigen::Success)
    throw numeric_failure("eigendecomposition failed in linearity fit");
  const Vector& values = eig.eigenvalues();
  double top = std::max(values[n * r - 1], 1e-300);
  *gap_ratio = n * r > 1 ? values[1] / top : 1.0;
  Vector t = eig.eigenvectors().col(0);
  Matrix candidate = Eigen::Map<const Matrix>(t.data(), n, r) * basis.transpose();
  return candidate;
}

}  // namespace

ProjectiveLinearity is_projectively_linear(const ConeMap& map, int samples,
                                           std::uint64_t seed) {
  if (samples <= 0) throw invalid_input("sample count must be positive");
  const ConeSpec& cone = map.cone();
  const int n = cone.ambient_dim();
  const int fit_samples = std::min(samples, std::max(4 * n, 50));

  Rng rng(seed);
  double gap_ratio = 0.0;
  Matrix candidate = fit_projective_candidate(map, fit_samples, rng, &gap_ratio);
  if (gap_ratio < 1e-8) {
    // Second-smallest eigenvalue also tiny: the fit is ambiguous for this
    // sample set.  One retry with fresh samples before giving up.
    candidate = fit_projective_candidate(map, 2 * fit_samples, rng, &gap_ratio);
    if (gap_ratio < 1e-8)
      throw numeric_failure("projective fit is rank deficient; samples too degenerate");
  }

  // Fix sign so the candidate maps the anchor toward the cone, then normalize.
  Point anchor = cone.interior_anchor();
  if ((candidate * anchor).dot(map.apply(anchor)) < 0.0) candidate = -candidate;
  candidate /= candidate.norm();

  Rng eval_rng(seed + 1);
  double residual = 0.0;
  for (int i = 0; i < samples; ++i) {
    Point x = sample_interior(cone, eval_rng);
    Point y = map.apply(x);
    y /= y.norm();
    Point tx = candidate * x;
    double scale = tx.norm();
    if (scale <= 0.0) {
      residual = 1.0;
      break;
    }
    residual = std::max(residual, (tx - y.dot(tx) * y).norm() / scale);
  }

  ProjectiveLinearity out;
  out.residual = residual;
  out.candidate = candidate;
  if (residual >= 1e-2) {
    out.verdict = LinearityVerdict::not_projective_linear;
  } else if (residual <= 1e-6) {
    bool into_cone = true;
    Rng cone_rng(seed + 2);
    for (int i = 0; i < 100 && into_cone; ++i) {
      Point x = sample_interior(cone, cone_rng);
      into_cone = classify(cone, candidate * x).region != Region::outside;
    }
    out.verdict = into_cone ? LinearityVerdict::projective_linear
                            : LinearityVerdict::inconclusive;
  } else {
    out.verdict = LinearityVerdict::inconclusive;
  }
  return out;
}

}  // namespace conegeo
