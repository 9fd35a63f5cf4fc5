#pragma once

#include "conegeo/cone.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace conegeo {

// A self-map of a cone's interior, built from the stock isometry families:
//   linear               x -> A x (A must map the cone into itself)
//   congruence(g)        x -> P(g) x for interior g (sym: g x g)
//   inversion            x -> x^{-1} in the cone's Jordan algebra
//   partial_inversion(i) orthant only: invert coordinate i
//   composite            left-to-right composition
// Construction validates on 100 seeded interior samples that images stay
// interior (margin > 0).
class ConeMap {
 public:
  enum class Kind { linear, congruence, inversion, partial_inversion, composite };

  static ConeMap Linear(const ConeSpec& cone, Matrix a);
  static ConeMap Congruence(const ConeSpec& cone, Point g);
  static ConeMap Inversion(const ConeSpec& cone);
  static ConeMap PartialInversion(const ConeSpec& cone, int coordinate);  // 0-based
  static ConeMap Composite(const ConeSpec& cone, std::vector<ConeMap> maps);

  Kind kind() const { return kind_; }
  const ConeSpec& cone() const { return cone_; }
  Point apply(const Point& x) const;

 private:
  explicit ConeMap(const ConeSpec& cone) : cone_(cone) {}
  void validate() const;

  ConeSpec cone_;
  Kind kind_{};
  Matrix a_;
  Point g_;
  int coordinate_ = -1;
  std::vector<ConeMap> parts_;
};

// Max |d(f(x), f(y)) - d(x, y)| over seeded interior sample pairs.
double check_isometry(const ConeMap& map, int samples = 10000, std::uint64_t seed = 0);

enum class LinearityVerdict { projective_linear, not_projective_linear, inconclusive };

// Fit of the best linear map T with f(x_i) parallel to T x_i (homogeneous
// least squares on the stacked rank-one constraints; smallest singular
// vector).  residual = max_i sin(angle(T x_i, f(x_i))).  Verdict:
// projective_linear when residual <= 1e-6 and T maps 100 sampled cone points
// into the cone; not_projective_linear when residual >= 1e-2; inconclusive
// between.
struct ProjectiveLinearity {
  LinearityVerdict verdict;
  double residual;
  Matrix candidate;
};

ProjectiveLinearity is_projectively_linear(const ConeMap& map, int samples = 10000,
                                           std::uint64_t seed = 0);

}  // namespace conegeo
