#include <doctest.h>

#include "convexcheck/functionals.hpp"
#include "support.hpp"

using namespace convexcheck;
using testing::RationalGen;

namespace {
const Point U = make_point({1, 0});
const Point V = make_point({0, 1});
const Point W = make_point({0, 0});
const LinearFunctional SUM(make_point({1, 1}));
}  // namespace

TEST_CASE("pair") {
  CHECK(pair(SUM, U) == 1);
  CHECK(pair(SUM, W) == 0);
  const LinearFunctional zero(make_point({0, 0, 0}));
  CHECK(pair(zero, make_point({5, Rational(-7, 3), 2})) == 0);
  CHECK_THROWS_AS(pair(SUM, make_point({1, 2, 3})), Error);
}

TEST_CASE("pairing is linear") {
  RationalGen gen(5);
  const LinearFunctional c(make_point({Rational(3, 2), -2, Rational(1, 7)}));
  for (int i = 0; i < 1000; ++i) {
    const Point x = make_point({gen.any(), gen.any(), gen.any()});
    const Point y = make_point({gen.any(), gen.any(), gen.any()});
    const Rational a = gen.any(), b = gen.any();
    CHECK(pair(c, Point(a * x + b * y)) == a * pair(c, x) + b * pair(c, y));
  }
}

TEST_CASE("is_constant_on") {
  const ConvexDomain tri = reference_triangle();
  const auto r = is_constant_on(SUM, tri);
  CHECK_FALSE(r.constant);
  REQUIRE(r.witness);
  CHECK(r.witness->first == U);
  CHECK(r.witness->second == W);
  CHECK(pair(SUM, r.witness->first) == 1);
  CHECK(pair(SUM, r.witness->second) == 0);

  CHECK(is_constant_on(SUM, Segment(U, V)).constant);
  CHECK(is_constant_on(LinearFunctional(make_point({0, 0})), tri).constant);
  CHECK(is_constant_on(LinearFunctional(make_point({0, 0})), EuclideanBall(W, 1)).constant);
  CHECK_FALSE(is_constant_on(LinearFunctional(make_point({0, 1})), EuclideanBall(W, 1)).constant);
}

TEST_CASE("construct_nonconstant_functional") {
  const auto c = construct_nonconstant_functional(reference_triangle());
  CHECK(c.coeffs() == make_point({1, -1}));
  CHECK(pair(c, U) == 1);
  CHECK(pair(c, V) == -1);

  CHECK(construct_nonconstant_functional(Segment(W, V)).coeffs() == make_point({0, -1}));

  try {
    construct_nonconstant_functional(Simplex({make_point({2, 3})}));
    FAIL("single point accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SinglePointDomain);
  }

  const ConvexDomain ball = EuclideanBall(make_point({1, 1}), Rational(1, 2));
  CHECK(construct_nonconstant_functional(ball).coeffs() == make_point({1, 0}));

  const ConvexDomain domains[] = {reference_triangle(), Segment(U, V), ball,
                                  ConvexPolygon2D({W, make_point({2, 0}), make_point({1, 1})}),
                                  Simplex({make_point({0, 0, 0}), make_point({0, 0, 1})})};
  for (const auto& d : domains) {
    CHECK_FALSE(is_constant_on(construct_nonconstant_functional(d), d).constant);
  }
}

TEST_CASE("perturbed oracles") {
  const auto r1 = fixture("remark1");
  const auto r3 = fixture("remark3");
  RationalGen gen(8);
  const auto zero = perturbed(r1.f, 0, SUM);
  for (int i = 0; i < 200; ++i) {
    const Point x = gen.triangle_point();
    CHECK(zero(x) == r1.f(x));
  }
  CHECK(perturbed(r1.f, 1, SUM)(make_point({Rational(1, 2), Rational(1, 2)})) == 2);
  CHECK(perturbed(r3.f, 1, SUM)(make_point({Rational(3, 4), Rational(1, 4)})) == 1);
  CHECK_THROWS_AS(perturbed(r1.f, 1, LinearFunctional(make_point({1, 1, 1}))), Error);
}

TEST_CASE("perturbation composes additively in lambda") {
  RationalGen gen(9);
  const auto f = fixture("weighted_quadratic").f;
  for (int i = 0; i < 200; ++i) {
    const Rational l1 = gen.any(), l2 = gen.any();
    const Point x = gen.triangle_point();
    CHECK(perturbed(f, l1 + l2, SUM)(x) == perturbed(perturbed(f, l1, SUM), l2, SUM)(x));
  }
}

TEST_CASE("fixture values") {
  const auto r1 = fixture("remark1");
  CHECK(r1.f(U) == 1);
  CHECK(r1.f(V) == 0);
  CHECK(r1.f(make_point({Rational(1, 2), Rational(1, 2)})) == 1);
  CHECK(r1.c.coeffs() == make_point({1, 1}));

  const auto r3 = fixture("remark3");
  CHECK(r3.f(make_point({Rational(1, 2), Rational(1, 2)})) == 0);
  CHECK(r3.f(U) == 1);
  CHECK(r3.f(W) == 1);

  CHECK(fixture("quadratic").f(make_point({Rational(1, 2), Rational(1, 2)})) == Rational(1, 2));
  CHECK(fixture("linear").f(make_point({Rational(1, 3), Rational(1, 4)})) == Rational(7, 12));

  try {
    fixture("nope");
    FAIL("unknown fixture accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFixture);
  }
  for (const auto& name : fixture_names()) {
    const auto fx = fixture(name);
    CHECK(fx.name == name);
    CHECK(fx.f.dimension() == dimension(fx.domain));
    CHECK(fx.c.dimension() == dimension(fx.domain));
    CHECK_FALSE(is_constant_on(fx.c, fx.domain).constant);
  }
}

TEST_CASE("remark1 value depends only on the half-open edge predicate") {
  const auto r1 = fixture("remark1");
  RationalGen gen(10);
  int on_edge = 0;
  for (int i = 0; i < 1000; ++i) {
    const Point x = gen.triangle_point(3);
    const bool predicate = x[0] + x[1] == 1 && x[0] > 0;
    on_edge += predicate;
    CHECK(r1.f(x) == (predicate ? 1 : 0));
  }
  CHECK(on_edge > 50);
}

TEST_CASE("oracles are deterministic") {
  RationalGen gen(13);
  for (const auto& name : fixture_names()) {
    const auto fx = fixture(name);
    for (int i = 0; i < 20; ++i) {
      const Point x = fx.f.dimension() == 2 ? gen.triangle_point() : Point(Point::Zero(fx.f.dimension()));
      CHECK(fx.f(x) == fx.f(x));
    }
  }
}
