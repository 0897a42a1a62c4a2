#include <doctest.h>

#include "fatpoints/errors.hpp"
#include "fatpoints/geometry.hpp"

using namespace fatpoints;

TEST_CASE("rationals parse and print canonically") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-10/5")) == "-2");
  CHECK(format_rational(parse_rational("7")) == "7");
  CHECK(format_rational(parse_rational("3/-6")) == "-1/2");
  CHECK_THROWS_AS((void)parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS((void)parse_rational("abc"), ParseError);
  CHECK_THROWS_AS((void)parse_rational(""), ParseError);
}

TEST_CASE("projective coordinates are canonical") {
  const ProjPoint p(2, 4, 6);
  CHECK(p == ProjPoint(1, 2, 3));
  CHECK(p == ProjPoint(-3, -6, -9));
  CHECK(p.coords()[0] == 1);
  CHECK(ProjPoint(0, 5, -10) == ProjPoint(0, 1, -2));
  CHECK(ProjPoint(Rational(1, 2), Rational(1, 3), Rational(0)) == ProjPoint(3, 2, 0));
  CHECK_THROWS_AS(ProjPoint(0, 0, 0), Error);

  const ProjPoint q(Rational(2, 3), Rational(-4, 9), Rational(5));
  CHECK(ProjPoint(q.coords()) == q);
  const auto ints = q.primitive_integers();
  CHECK(ints[0] == 6);
  CHECK(ints[1] == -4);
  CHECK(ints[2] == 45);
}

TEST_CASE("intersect") {
  CHECK(intersect(ProjLine(1, 0, 0), ProjLine(0, 1, 0)) == ProjPoint(0, 0, 1));
  CHECK(intersect(ProjLine(1, 0, 0), ProjLine(1, 1, 1)) == ProjPoint(0, 1, -1));
  CHECK(intersect(ProjLine(0, 0, 1), ProjLine(1, -1, 0)) == ProjPoint(1, 1, 0));
  CHECK_THROWS_AS((void)intersect(ProjLine(1, 2, 3), ProjLine(2, 4, 6)), IdenticalLines);
}

TEST_CASE("incident") {
  CHECK(incident(ProjPoint(0, 0, 1), ProjLine(1, 0, 0)));
  CHECK(incident(ProjPoint(1, 1, 1), ProjLine(1, -1, 0)));
  CHECK_FALSE(incident(ProjPoint(1, 2, 3), ProjLine(1, 0, 0)));
}

TEST_CASE("line_through") {
  const ProjPoint a(1, 0, 1);
  const ProjPoint b(0, 1, 1);
  const auto l = line_through(a, b);
  CHECK(incident(a, l));
  CHECK(incident(b, l));
  CHECK_THROWS_AS((void)line_through(a, a), Error);
}

TEST_CASE("is_general_position") {
  const std::vector<ProjLine> axes{ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1)};
  CHECK(is_general_position(axes));
  const std::vector<ProjLine> pencil{ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, 0)};
  CHECK_FALSE(is_general_position(pencil));
  const std::vector<ProjLine> twice{ProjLine(1, 0, 0), ProjLine(1, 0, 0)};
  CHECK_FALSE(is_general_position(twice));
  CHECK(is_general_position(std::vector<ProjLine>{}));
}

TEST_CASE("random_arrangement") {
  CHECK(random_arrangement(1, 123).size() == 1);

  const auto arr = random_arrangement(4, 7);
  REQUIRE(arr.size() == 4);
  CHECK(arr.seed == 7);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      for (std::size_t k = j + 1; k < 4; ++k) {
        CHECK(det3(arr.lines[i].coords(), arr.lines[j].coords(), arr.lines[k].coords()) != 0);
      }
    }
  }
  CHECK(random_arrangement(4, 7) == arr);
  CHECK_FALSE(random_arrangement(4, 8) == arr);
  CHECK_THROWS_AS((void)random_arrangement(0, 1), Error);
}

TEST_CASE("property: random arrangements are always in general position") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto arr = random_arrangement(3 + seed % 8, seed);
    CHECK(is_general_position(arr.lines));
    const auto p = intersect(arr.lines[0], arr.lines[1]);
    CHECK(incident(p, arr.lines[0]));
    CHECK(incident(p, arr.lines[1]));
    CHECK(ProjPoint(p.coords()) == p);
  }
}

TEST_CASE("points_on_line_avoiding") {
  const ProjLine z0(0, 0, 1);
  CHECK(points_on_line_avoiding(z0, 0, {}, 5).empty());

  const std::vector<ProjPoint> forbidden{ProjPoint(1, 0, 0)};
  const auto pts = points_on_line_avoiding(z0, 3, forbidden, 5);
  REQUIRE(pts.size() == 3);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(pts[i].coords()[2] == 0);
    CHECK_FALSE(pts[i] == forbidden[0]);
    for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK_FALSE(pts[i] == pts[j]);
  }
  CHECK(points_on_line_avoiding(z0, 3, forbidden, 5) == pts);
}

TEST_CASE("property: generated points lie on their line and avoid the forbidden set") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto arr = random_arrangement(4, seed);
    std::vector<ProjPoint> forbidden;
    for (std::size_t k = 1; k < 4; ++k) forbidden.push_back(intersect(arr.lines[0], arr.lines[k]));
    const auto pts = points_on_line_avoiding(arr.lines[0], 12, forbidden, seed + 1000);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(incident(pts[i], arr.lines[0]));
      for (std::size_t k = 1; k < 4; ++k) CHECK_FALSE(incident(pts[i], arr.lines[k]));
      for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK_FALSE(pts[i] == pts[j]);
    }
  }
}

TEST_CASE("point_off_lines and projective maps") {
  const auto arr = random_arrangement(5, 3);
  const auto p = point_off_lines(arr.lines, {}, 11);
  for (const auto& l : arr.lines) CHECK_FALSE(incident(p, l));

  const auto m = random_projective_map(4);
  CHECK(det3(m[0], m[1], m[2]) != 0);
  // Incidence is preserved by the induced map on lines, so collinear points
  // stay collinear.
  const ProjPoint a(1, 0, 0);
  const ProjPoint b(0, 1, 0);
  const ProjPoint c(1, 1, 0);
  CHECK(det3(apply(m, a).coords(), apply(m, b).coords(), apply(m, c).coords()) == 0);
}

TEST_CASE("derive_seed separates streams") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(9, 4) == derive_seed(9, 4));
}
