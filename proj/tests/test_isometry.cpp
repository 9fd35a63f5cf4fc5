#include "conegeo/isometry.hpp"

#include "conegeo/common.hpp"
#include "conegeo/metrics.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <cmath>
#include <vector>

using namespace conegeo;
using conegeo::testing::hexagonal_cone;
using conegeo::testing::pt;

TEST_CASE("coordinate permutations are exact isometries and projectively linear") {
  const ConeSpec cone = ConeSpec::Orthant(3);
  Matrix a(3, 3);
  a << 0, 1, 0, 0, 0, 1, 1, 0, 0;
  const ConeMap map = ConeMap::Linear(cone, a);
  CHECK(map.apply(pt({2, 3, 5})).isApprox(pt({3, 5, 2})));
  CHECK(check_isometry(map, 500) <= 1e-12);
  const ProjectiveLinearity fit = is_projectively_linear(map, 500);
  CHECK(fit.verdict == LinearityVerdict::projective_linear);
  CHECK(fit.residual <= 1e-8);
  CHECK(direction_sin(fit.candidate * pt({1, 2, 3}), map.apply(pt({1, 2, 3}))) <= 1e-8);
}

TEST_CASE("linear maps that leave the cone are rejected at construction") {
  const ConeSpec cone = ConeSpec::Orthant(2);
  Matrix flip(2, 2);
  flip << 1, 0, 0, -1;
  CHECK_THROWS_AS(ConeMap::Linear(cone, flip), invalid_input);
  CHECK_THROWS_AS(ConeMap::Linear(cone, Matrix::Identity(3, 3)), invalid_input);
}

TEST_CASE("quadratic congruences preserve distances on matrix cones") {
  const ConeSpec cone = ConeSpec::Psd(2);
  const ConeMap map = ConeMap::Congruence(cone, pt({2, 0.3, 0.3, 1}));
  CHECK(check_isometry(map, 1000) <= 1e-9);
  const ProjectiveLinearity fit = is_projectively_linear(map, 500);
  CHECK(fit.verdict == LinearityVerdict::projective_linear);
  CHECK(fit.residual <= 1e-7);
  // The parameter itself must be interior, and the cone must carry a
  // quadratic representation at all; the orthant does (coordinatewise
  // squares) while a generic polyhedral cone does not.
  CHECK_THROWS_AS(ConeMap::Congruence(cone, pt({1, 2, 2, 1})), invalid_input);
  CHECK_THROWS_AS(ConeMap::Congruence(hexagonal_cone(), pt({0, 0, 1})), invalid_input);
  const ConeMap diag = ConeMap::Congruence(ConeSpec::Orthant(2), pt({2, 3}));
  CHECK((diag.apply(pt({1, 1})) - pt({4, 9})).norm() <= 1e-12);
}

TEST_CASE("matrix inversion on two-by-two cones reduces to the adjugate") {
  const ConeSpec cone = ConeSpec::Psd(2);
  const ConeMap map = ConeMap::Inversion(cone);
  const Point x = pt({2, 0.5, 0.5, 1});  // inverse proportional to (1,-0.5,-0.5,2)
  CHECK(direction_sin(map.apply(x), pt({1, -0.5, -0.5, 2})) <= 1e-12);
  CHECK(check_isometry(map, 1000) <= 1e-9);
  const ProjectiveLinearity fit = is_projectively_linear(map, 500);
  CHECK(fit.verdict == LinearityVerdict::projective_linear);
}

TEST_CASE("coordinatewise inversion is an isometry but not projectively linear") {
  const ConeSpec cone = ConeSpec::Orthant(3);
  const ConeMap map = ConeMap::Inversion(cone);
  CHECK(map.apply(pt({2, 4, 0.5})).isApprox(pt({0.5, 0.25, 2})));
  CHECK(check_isometry(map, 1000) <= 1e-12);
  const ProjectiveLinearity fit = is_projectively_linear(map, 500);
  CHECK(fit.verdict == LinearityVerdict::not_projective_linear);
  CHECK(fit.residual >= 1e-2);
}

TEST_CASE("inverting a single coordinate preserves distances without linearity") {
  const ConeSpec cone = ConeSpec::Orthant(3);
  const ConeMap map = ConeMap::PartialInversion(cone, 0);
  CHECK(map.apply(pt({4, 3, 5})).isApprox(pt({0.25, 3, 5})));
  CHECK(check_isometry(map, 1000) <= 1e-9);
  CHECK(is_projectively_linear(map, 500).verdict ==
        LinearityVerdict::not_projective_linear);

  CHECK_THROWS_AS(ConeMap::PartialInversion(ConeSpec::Psd(2), 0), invalid_input);
  CHECK_THROWS_AS(ConeMap::PartialInversion(cone, 3), invalid_input);
  CHECK_THROWS_AS(ConeMap::PartialInversion(cone, -1), invalid_input);
}

TEST_CASE("hyperbolic rotations preserve the round cone metric") {
  const ConeSpec cone = ConeSpec::Lorentz(3);
  const double a = 0.7;
  Matrix boost = Matrix::Identity(3, 3);
  boost(0, 0) = std::cosh(a);
  boost(0, 1) = std::sinh(a);
  boost(1, 0) = std::sinh(a);
  boost(1, 1) = std::cosh(a);
  const ConeMap map = ConeMap::Linear(cone, boost);
  CHECK(check_isometry(map, 1000) <= 1e-9);
  CHECK(is_projectively_linear(map, 500).verdict ==
        LinearityVerdict::projective_linear);
}

TEST_CASE("composites apply their parts left to right") {
  const ConeSpec cone = ConeSpec::Orthant(2);
  Matrix swap(2, 2);
  swap << 0, 1, 1, 0;
  std::vector<ConeMap> parts;
  parts.push_back(ConeMap::Linear(cone, swap));
  parts.push_back(ConeMap::PartialInversion(cone, 0));
  const ConeMap first_swap = ConeMap::Composite(cone, parts);
  CHECK(first_swap.apply(pt({2, 3})).isApprox(pt({1.0 / 3.0, 2})));

  std::vector<ConeMap> reversed;
  reversed.push_back(ConeMap::PartialInversion(cone, 0));
  reversed.push_back(ConeMap::Linear(cone, swap));
  const ConeMap first_invert = ConeMap::Composite(cone, reversed);
  CHECK(first_invert.apply(pt({2, 3})).isApprox(pt({3, 0.5})));

  CHECK(check_isometry(first_swap, 500) <= 1e-12);
  CHECK_THROWS_AS(ConeMap::Composite(cone, std::vector<ConeMap>{}), invalid_input);
}

TEST_CASE("a shear keeps the cone invariant yet distorts distances") {
  const ConeSpec cone = ConeSpec::Orthant(2);
  Matrix shear(2, 2);
  shear << 1, 1, 0, 1;
  const ConeMap map = ConeMap::Linear(cone, shear);
  // (4,1) and (1,1) are log(4) apart; their images (5,1), (2,1) only log(5/2).
  const double before = thompson_distance(cone, pt({4, 1}), pt({1, 1}));
  const double after = thompson_distance(cone, map.apply(pt({4, 1})), map.apply(pt({1, 1})));
  CHECK(std::abs(after - before) > 0.4);
  CHECK(check_isometry(map, 500) >= 0.1);
  // Distortion does not spoil linearity: the fit still recovers the matrix.
  const ProjectiveLinearity fit = is_projectively_linear(map, 500);
  CHECK(fit.verdict == LinearityVerdict::projective_linear);
  CHECK(fit.residual <= 1e-8);
}
