#include "conegeo/io.hpp"

#include "conegeo/isometry.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <cmath>
#include <sstream>

using namespace conegeo;
using conegeo::testing::pt;

TEST_CASE("cone files parse every kind with comments and loose whitespace") {
  {
    std::istringstream in("# a comment line\ncone orthant\n dim 3 # trailing\n");
    const ConeSpec cone = read_cone(in);
    CHECK(cone.kind() == ConeKind::orthant);
    CHECK(cone.ambient_dim() == 3);
  }
  {
    std::istringstream in("cone lorentz\ndim 4\n");
    CHECK(read_cone(in).kind() == ConeKind::lorentz);
  }
  {
    std::istringstream in("cone psd\ndim 9\n");
    const ConeSpec cone = read_cone(in);
    CHECK(cone.kind() == ConeKind::psd);
    CHECK(cone.order() == 3);
  }
  {
    std::istringstream in(
        "cone polyhedral\ndim 2\nfacets 3\n1 0\n0 1\n1 1\n");
    const ConeSpec cone = read_cone(in);
    CHECK(cone.kind() == ConeKind::polyhedral);
    CHECK(cone.facets().rows() == 3);
    CHECK(is_interior(cone, pt({1, 1})));
  }
}

TEST_CASE("cone files reject malformed input") {
  {
    std::istringstream in("cone moebius\ndim 2\n");
    CHECK_THROWS_AS(read_cone(in), invalid_input);
  }
  {
    std::istringstream in("cone psd\ndim 5\n");  // not a perfect square
    CHECK_THROWS_AS(read_cone(in), invalid_input);
  }
  {
    std::istringstream in("cone orthant\ndim 2\nextra\n");
    CHECK_THROWS_AS(read_cone(in), invalid_input);
  }
  {
    std::istringstream in("dim 2\ncone orthant\n");
    CHECK_THROWS_AS(read_cone(in), invalid_input);
  }
  {
    std::istringstream in("cone orthant\ndim zero\n");
    CHECK_THROWS_AS(read_cone(in), invalid_input);
  }
}

TEST_CASE("point files accept the optional keyword and demand an exact count") {
  const ConeSpec cone = ConeSpec::Orthant(3);
  {
    std::istringstream in("point 2 1 1\n");
    CHECK(read_point(in, cone).isApprox(pt({2, 1, 1})));
  }
  {
    std::istringstream in("# free-form layout\n2\n1\n1\n");
    CHECK(read_point(in, cone).isApprox(pt({2, 1, 1})));
  }
  {
    std::istringstream in("point 2 1\n");
    CHECK_THROWS_AS(read_point(in, cone), invalid_input);
  }
  {
    std::istringstream in("point 2 1 1 9\n");
    CHECK_THROWS_AS(read_point(in, cone), invalid_input);
  }
  {
    std::istringstream in("2 1 frog\n");
    CHECK_THROWS_AS(read_point(in, cone), invalid_input);
  }
}

TEST_CASE("map files build each stanza kind") {
  const ConeSpec orthant = ConeSpec::Orthant(3);
  {
    std::istringstream in("map linear\n0 1 0\n0 0 1\n1 0 0\n");
    const ConeMap map = read_map(in, orthant);
    CHECK(map.kind() == ConeMap::Kind::linear);
    CHECK(map.apply(pt({2, 3, 5})).isApprox(pt({3, 5, 2})));
  }
  {
    std::istringstream in("map inversion\n");
    const ConeMap map = read_map(in, orthant);
    CHECK(map.apply(pt({2, 4, 0.5})).isApprox(pt({0.5, 0.25, 2})));
  }
  {
    // File indices are 1-based: index 1 inverts the first coordinate.
    std::istringstream in("map partial_inversion\nindex 1\n");
    const ConeMap map = read_map(in, orthant);
    CHECK(map.apply(pt({2, 3, 5})).isApprox(pt({0.5, 3, 5})));
  }
  {
    const ConeSpec psd = ConeSpec::Psd(2);
    std::istringstream in("map congruence\n2 0.3 0.3 1\n");
    CHECK(read_map(in, psd).kind() == ConeMap::Kind::congruence);
  }
}

TEST_CASE("multiple stanzas compose in file order") {
  const ConeSpec cone = ConeSpec::Orthant(2);
  std::istringstream in(
      "map linear\n0 1\n1 0\n"
      "map partial_inversion\nindex 1\n");
  const ConeMap map = read_map(in, cone);
  CHECK(map.kind() == ConeMap::Kind::composite);
  // Swap first, then invert the new first coordinate.
  CHECK(map.apply(pt({2, 3})).isApprox(pt({1.0 / 3.0, 2})));
}

TEST_CASE("map files reject malformed stanzas") {
  const ConeSpec cone = ConeSpec::Orthant(2);
  {
    std::istringstream in("map rotation\n");
    CHECK_THROWS_AS(read_map(in, cone), invalid_input);
  }
  {
    std::istringstream in("map partial_inversion\nindex 0\n");
    CHECK_THROWS_AS(read_map(in, cone), invalid_input);
  }
  {
    std::istringstream in("map partial_inversion\nindex 3\n");
    CHECK_THROWS_AS(read_map(in, cone), invalid_input);
  }
  {
    std::istringstream in("map linear\n1 0\n0 1\nleftover\n");
    CHECK_THROWS_AS(read_map(in, cone), invalid_input);
  }
  {
    std::istringstream in("");
    CHECK_THROWS_AS(read_map(in, cone), invalid_input);
  }
}

TEST_CASE("fixed-point rendering is stable and never prints negative zero") {
  CHECK(format_real(std::log(2.0), 12) == "0.693147180560");
  CHECK(format_real(1.0, 6) == "1.000000");
  CHECK(format_real(-1e-15, 12) == "0.000000000000");
  CHECK(format_real(-0.25, 6) == "-0.250000");
  CHECK_THROWS_AS(format_real(std::nan(""), 12), numeric_failure);
  CHECK_THROWS_AS(format_real(1.0, -1), invalid_input);
}
