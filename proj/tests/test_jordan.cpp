#include "conegeo/jordan.hpp"
#include "conegeo/sampling.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <cmath>

using namespace conegeo;
using conegeo::testing::pt;

namespace {

Point sample_positive(const JordanAlgebra& alg, Rng& rng) {
  switch (alg.family()) {
    case JordanAlgebra::Family::orthant:
      return sample_interior(ConeSpec::Orthant(alg.dim()), rng);
    case JordanAlgebra::Family::sym:
      return sample_interior(ConeSpec::Psd(alg.order()), rng);
    case JordanAlgebra::Family::spin:
      return sample_interior(ConeSpec::Lorentz(alg.dim()), rng);
  }
  throw invalid_input("unknown family");
}

Point sample_element(const JordanAlgebra& alg, Rng& rng) {
  // Arbitrary (not necessarily positive) element.
  Point p = sample_positive(alg, rng);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return p * u(rng) + alg.unit() * u(rng);
}

}  // namespace

TEST_CASE("products match the closed forms of each family") {
  const JordanAlgebra orth = JordanAlgebra::Orthant(3);
  CHECK((orth.product(pt({1, 2, 3}), pt({4, 5, 6})) - pt({4, 10, 18})).norm() == 0.0);

  const JordanAlgebra sym = JordanAlgebra::Sym(2);
  // (AB + BA)/2 for A = [[1,2],[2,0]], B = [[0,1],[1,3]].
  const Point a = pt({1, 2, 2, 0});
  const Point b = pt({0, 1, 1, 3});
  const Point ab = sym.product(a, b);
  CHECK((ab - pt({2, 3.5, 3.5, 2})).norm() == doctest::Approx(0.0).epsilon(1e-14));

  const JordanAlgebra spin = JordanAlgebra::Spin(3);
  // (s,u) o (t,v) = (st + <u,v>, s v + t u).
  const Point c = spin.product(pt({2, 1, 0}), pt({3, 0, 1}));
  CHECK((c - pt({6, 3, 2})).norm() == 0.0);
}

TEST_CASE("the unit element is neutral in all families") {
  Rng rng(3);
  const JordanAlgebra algebras[] = {JordanAlgebra::Orthant(4), JordanAlgebra::Sym(3),
                                    JordanAlgebra::Spin(4)};
  for (const JordanAlgebra& alg : algebras) {
    const Point x = sample_element(alg, rng);
    CHECK((alg.product(alg.unit(), x) - x).norm() <= 1e-12 * (1.0 + x.norm()));
  }
}

TEST_CASE("lmul and quadratic_rep agree with their elementwise definitions") {
  Rng rng(5);
  const JordanAlgebra algebras[] = {JordanAlgebra::Orthant(3), JordanAlgebra::Sym(3),
                                    JordanAlgebra::Spin(4)};
  for (const JordanAlgebra& alg : algebras) {
    const Point a = sample_element(alg, rng);
    const Point z = sample_element(alg, rng);
    const Matrix l = alg.lmul(a);
    CHECK((l * z - alg.product(a, z)).norm() <= 1e-12 * (1.0 + z.norm()));

    // P(a) = 2 L(a)^2 - L(a o a) as matrices, and as an operator on z.
    const Matrix p = alg.quadratic_rep(a);
    const Matrix p_ref = 2.0 * l * l - alg.lmul(alg.product(a, a));
    CHECK((p - p_ref).cwiseAbs().maxCoeff() <= 1e-11 * (1.0 + p_ref.cwiseAbs().maxCoeff()));
    CHECK((p * z - alg.apply_quadratic(a, z)).norm() <= 1e-11 * (1.0 + z.norm()));
  }
}

TEST_CASE("spectral decomposition on the orthant clusters equal coordinates") {
  const JordanAlgebra alg = JordanAlgebra::Orthant(3);
  const SpectralDecomp d = alg.spectral(pt({3, 1, 3}));
  REQUIRE(d.eigenvalues.size() == 2);
  CHECK(d.eigenvalues[0] == 1.0);
  CHECK(d.eigenvalues[1] == 3.0);
  CHECK((d.idempotents[0] - pt({0, 1, 0})).norm() == 0.0);
  CHECK((d.idempotents[1] - pt({1, 0, 1})).norm() == 0.0);
}

TEST_CASE("spin spectral decomposition has the two closed-form idempotents") {
  const JordanAlgebra alg = JordanAlgebra::Spin(4);
  const SpectralDecomp d = alg.spectral(pt({2, 1, 0, 0}));
  REQUIRE(d.eigenvalues.size() == 2);
  CHECK(d.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(d.eigenvalues[1] == doctest::Approx(3.0));
  CHECK((d.idempotents[0] - pt({0.5, -0.5, 0, 0})).norm() <= 1e-15);
  CHECK((d.idempotents[1] - pt({0.5, 0.5, 0, 0})).norm() <= 1e-15);

  // Multiples of the unit collapse to a single eigenvalue.
  const SpectralDecomp e = alg.spectral(pt({5, 0, 0, 0}));
  REQUIRE(e.eigenvalues.size() == 1);
  CHECK(e.eigenvalues[0] == 5.0);
}

TEST_CASE("spectral systems are complete orthogonal idempotent families") {
  Rng rng(9);
  const JordanAlgebra algebras[] = {JordanAlgebra::Orthant(4), JordanAlgebra::Sym(3),
                                    JordanAlgebra::Spin(4)};
  for (const JordanAlgebra& alg : algebras) {
    for (int trial = 0; trial < 20; ++trial) {
      const Point x = sample_element(alg, rng);
      const SpectralDecomp d = alg.spectral(x);
      const double scale = 1.0 + x.norm();

      Point sum = Vector::Zero(alg.dim());
      Point rebuilt = Vector::Zero(alg.dim());
      for (size_t i = 0; i < d.eigenvalues.size(); ++i) {
        const Point& c = d.idempotents[i];
        sum += c;
        rebuilt += d.eigenvalues[i] * c;
        CHECK((alg.product(c, c) - c).norm() <= 1e-9);
        for (size_t j = i + 1; j < d.eigenvalues.size(); ++j) {
          // Trace-orthogonal idempotents from one decomposition multiply to
          // zero.
          CHECK(std::abs(c.dot(d.idempotents[j])) <= 1e-9);
          CHECK(alg.product(c, d.idempotents[j]).norm() <= 1e-9);
        }
      }
      CHECK((sum - alg.unit()).norm() <= 1e-10);
      CHECK((rebuilt - x).norm() <= 1e-9 * scale);
    }
  }
}

TEST_CASE("eigenvalues within the relative cluster gap merge, larger gaps do not") {
  const JordanAlgebra alg = JordanAlgebra::Orthant(3);
  CHECK(alg.spectral(pt({1.0, 1.0 + 1e-8, 5.0})).eigenvalues.size() == 2);
  CHECK(alg.spectral(pt({1.0, 1.0 + 1e-6, 5.0})).eigenvalues.size() == 3);
}

TEST_CASE("power implements the spectral calculus") {
  Rng rng(13);
  const JordanAlgebra algebras[] = {JordanAlgebra::Orthant(4), JordanAlgebra::Sym(3),
                                    JordanAlgebra::Spin(4)};
  for (const JordanAlgebra& alg : algebras) {
    const Point x = sample_positive(alg, rng);
    const double scale = 1.0 + x.norm();

    const Point root = alg.power(x, 0.5);
    CHECK((alg.product(root, root) - x).norm() <= 1e-9 * scale);

    const Point inv = alg.power(x, -1.0);
    CHECK((alg.product(x, inv) - alg.unit()).norm() <= 1e-9);

    // P(x^{-1}) inverts P(x).
    const Matrix p = alg.quadratic_rep(x);
    const Matrix p_inv = alg.quadratic_rep(inv);
    CHECK((p * p_inv - Matrix::Identity(alg.dim(), alg.dim())).cwiseAbs().maxCoeff() <= 1e-8);
  }
}

TEST_CASE("power rejects non-integer exponents on elements with non-positive spectrum") {
  const JordanAlgebra alg = JordanAlgebra::Orthant(2);
  CHECK_THROWS_AS(alg.power(pt({-2, 3}), 0.5), invalid_input);
  const Point squared = alg.power(pt({-2, 3}), 2.0);
  CHECK((squared - pt({4, 9})).norm() == 0.0);
}

TEST_CASE("quadratic representations of positive elements preserve positivity") {
  Rng rng(17);
  const struct {
    JordanAlgebra alg;
    ConeSpec cone;
  } cases[] = {{JordanAlgebra::Sym(3), ConeSpec::Psd(3)},
               {JordanAlgebra::Spin(4), ConeSpec::Lorentz(4)}};
  for (const auto& c : cases) {
    for (int trial = 0; trial < 20; ++trial) {
      const Point a = sample_interior(c.cone, rng);
      const Point z = sample_interior(c.cone, rng);
      CHECK(classify(c.cone, c.alg.apply_quadratic(a, z)).region == Region::interior);
    }
  }
}

TEST_CASE("relative spectra are invariant under quadratic congruence") {
  Rng rng(21);
  const JordanAlgebra alg = JordanAlgebra::Sym(3);
  const ConeSpec cone = ConeSpec::Psd(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Point x = sample_interior(cone, rng);
    const Point y = sample_interior(cone, rng);
    const Point g = sample_interior(cone, rng);
    const auto before = alg.relative_spectrum(x, y);
    const auto after =
        alg.relative_spectrum(alg.apply_quadratic(g, x), alg.apply_quadratic(g, y));
    REQUIRE(before.size() == after.size());
    for (size_t i = 0; i < before.size(); ++i)
      CHECK(after[i] == doctest::Approx(before[i]).epsilon(1e-7));
  }
}

TEST_CASE("relative spectrum of coordinate vectors is the sorted ratio list") {
  const JordanAlgebra alg = JordanAlgebra::Orthant(3);
  const auto rel = alg.relative_spectrum(pt({2, 1, 1}), pt({1, 1, 2}));
  REQUIRE(rel.size() == 3);
  CHECK(rel[0] == doctest::Approx(0.5));
  CHECK(rel[1] == doctest::Approx(1.0));
  CHECK(rel[2] == doctest::Approx(2.0));
  CHECK_THROWS_AS(alg.relative_spectrum(pt({-1, 1, 1}), pt({1, 1, 1})), invalid_input);
}

TEST_CASE("spin hyperboloid points sit at exact exponential distance from the apex ray") {
  const JordanAlgebra alg = JordanAlgebra::Spin(3);
  const Point e = alg.unit();
  // The top relative eigenvalue s + |w| is cancellation-free, so its log is
  // exact even at t = 30.  The lower eigenvalue s - |w| = e^{-t} loses about
  // e^{2t} ulp to cancellation, so the two-sided distance is only tested at
  // depths where doubles still carry it.
  for (double t : {1.0, 10.0, 30.0}) {
    const Point x = pt({std::cosh(t), std::sinh(t), 0.0});
    CHECK(std::log(alg.max_relative_eigenvalue(x, e)) == doctest::Approx(t).epsilon(1e-12));
  }
  for (double t : {1.0, 3.0, 5.0}) {
    const Point x = pt({std::cosh(t), std::sinh(t), 0.0});
    CHECK(jordan_thompson(alg, x, e) == doctest::Approx(t).epsilon(1e-12));
  }
}

TEST_CASE("matrix-scale distance agrees with the coordinate formula on diagonals") {
  const JordanAlgebra alg = JordanAlgebra::Sym(2);
  const Point x = pt({4, 0, 0, 0.25});
  CHECK(jordan_thompson(alg, x, alg.unit()) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("algebras reject mismatched element lengths") {
  const JordanAlgebra alg = JordanAlgebra::Sym(2);
  CHECK_THROWS_AS(alg.product(pt({1, 2, 3}), alg.unit()), invalid_input);
  CHECK(JordanAlgebra::ForCone(ConeSpec::Lorentz(5)).family() == JordanAlgebra::Family::spin);
  CHECK_THROWS_AS(JordanAlgebra::ForCone(conegeo::testing::hexagonal_cone()), invalid_input);
}
