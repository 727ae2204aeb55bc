#include <doctest.h>

#include "convexcheck/domain.hpp"
#include "support.hpp"

using namespace convexcheck;
using testing::RationalGen;

namespace {

const Point U = make_point({1, 0});
const Point V = make_point({0, 1});
const Point W = make_point({0, 0});

Simplex triangle() { return Simplex({U, V, W}); }

}  // namespace

TEST_CASE("barycentric coordinates on the reference triangle") {
  const auto S = triangle();
  SUBCASE("vertex") {
    const auto b = barycentric(S, U);
    CHECK(b == make_point({1, 0, 0}));
  }
  SUBCASE("edge midpoint, checked against Cramer's rule") {
    const Point p = make_point({Rational(1, 2), Rational(1, 2)});
    const auto oracle = testing::cramer_barycentric(U, V, W, p);
    CHECK(oracle[0] == Rational(1, 2));
    CHECK(oracle[1] == Rational(1, 2));
    CHECK(oracle[2] == 0);
    CHECK(barycentric(S, p) == make_point({Rational(1, 2), Rational(1, 2), 0}));
  }
  SUBCASE("interior") {
    const Point p = make_point({Rational(1, 4), Rational(1, 4)});
    const auto oracle = testing::cramer_barycentric(U, V, W, p);
    CHECK(oracle[2] == Rational(1, 2));
    CHECK(barycentric(S, p) == make_point({Rational(1, 4), Rational(1, 4), Rational(1, 2)}));
  }
  SUBCASE("outside gives negative coordinates") {
    const auto b = barycentric(S, make_point({2, 0}));
    CHECK(b == make_point({2, 0, -1}));
  }
}

TEST_CASE("barycentric errors") {
  CHECK_THROWS_AS(barycentric(triangle(), make_point({1, 2, 3})), Error);
  try {
    Simplex({U, V, make_point({2, -1})});
    FAIL("collinear vertices accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateSimplex);
  }
  CHECK_THROWS_AS(Simplex({U, V, W, make_point({1, 1})}), Error);
  const Simplex edge({U, V});
  try {
    barycentric(edge, W);
    FAIL("off-hull point accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PointOutsideAffineHull);
  }
}

TEST_CASE("barycentric round trip matches Cramer's rule on random triangles") {
  RationalGen gen(11);
  int checked = 0;
  while (checked < 200) {
    const Point a = make_point({gen.any(), gen.any()});
    const Point b = make_point({gen.any(), gen.any()});
    const Point c = make_point({gen.any(), gen.any()});
    if (cross2<Rational>(b - a, c - a) == 0) continue;
    const Simplex S({a, b, c});
    const Rational b0 = gen.any(4, 5), b1 = gen.any(4, 5);
    const Rational b2 = 1 - b0 - b1;
    const Point p = b0 * a + b1 * b + b2 * c;
    const auto coords = barycentric(S, p);
    CHECK(coords == make_point({b0, b1, b2}));
    const auto oracle = testing::cramer_barycentric(a, b, c, p);
    CHECK(coords == make_point({oracle[0], oracle[1], oracle[2]}));
    ++checked;
  }
}

TEST_CASE("barycentric round trip on a 3-simplex and a lower-dimensional simplex") {
  RationalGen gen(12);
  const Simplex tet({make_point({0, 0, 0}), make_point({2, 0, 0}), make_point({0, 3, 0}),
                     make_point({1, 1, 5})});
  const Simplex tri3({make_point({1, 0, 0}), make_point({0, 1, 0}), make_point({0, 0, 1})});
  for (int i = 0; i < 100; ++i) {
    const auto w = gen.weights(4);
    Point p = Point::Zero(3);
    for (std::size_t k = 0; k < 4; ++k) p += w[k] * tet.vertices()[k];
    CHECK(barycentric(tet, p) == make_point({w[0], w[1], w[2], w[3]}));

    const auto w3 = gen.weights(3);
    const Point q = w3[0] * tri3.vertices()[0] + w3[1] * tri3.vertices()[1] + w3[2] * tri3.vertices()[2];
    CHECK(barycentric(tri3, q) == make_point({w3[0], w3[1], w3[2]}));
  }
}

TEST_CASE("classify_point on the reference triangle") {
  const ConvexDomain C = triangle();
  CHECK(classify_point(C, W) == PointClass::Extreme);
  CHECK(classify_point(C, make_point({Rational(1, 2), Rational(1, 2)})) == PointClass::Flat);
  CHECK(classify_point(C, make_point({Rational(1, 4), Rational(1, 4)})) == PointClass::IntrinsicCore);
  CHECK(classify_point(C, make_point({1, 1})) == PointClass::Outside);
  CHECK(classify_point(C, make_point({0, Rational(1, 3)})) == PointClass::Flat);
}

TEST_CASE("classify_point agrees with the barycentric zero pattern") {
  const ConvexDomain C = triangle();
  RationalGen gen(21);
  for (int i = 0; i < 1000; ++i) {
    const Point p = make_point({gen.any(3, 8), gen.any(3, 8)});
    const auto b = testing::cramer_barycentric(U, V, W, p);
    const bool inside = b[0] >= 0 && b[1] >= 0 && b[2] >= 0;
    const int zeros = (b[0] == 0) + (b[1] == 0) + (b[2] == 0);
    PointClass expected = PointClass::Outside;
    if (inside) {
      expected = zeros == 2 ? PointClass::Extreme : zeros == 1 ? PointClass::Flat : PointClass::IntrinsicCore;
    }
    const PointClass cls = classify_point(C, p);
    CHECK(cls == expected);
    if (cls == PointClass::Flat) CHECK(contains(C, p));
  }
}

TEST_CASE("segments and balls have no flat points") {
  RationalGen gen(31);
  const ConvexDomain seg = Segment(make_point({-1, 2}), make_point({3, 0}));
  const ConvexDomain ball = EuclideanBall(make_point({1, -1}), Rational(3, 2));
  for (int i = 0; i < 1000; ++i) {
    const Rational tau = gen.any(2, 8);
    const Point on_line = make_point({-1, 2}) + tau * make_point({4, -2});
    const PointClass s = classify_point(seg, on_line);
    CHECK(s != PointClass::Flat);
    CHECK((s == PointClass::Outside) == (tau < 0 || tau > 1));
    CHECK((s == PointClass::Extreme) == (tau == 0 || tau == 1));

    const Point q = make_point({gen.any(3, 6), gen.any(3, 6)});
    const PointClass b = classify_point(ball, q);
    CHECK(b != PointClass::Flat);
  }
  CHECK(classify_point(ball, make_point({1, Rational(1, 2)})) == PointClass::Extreme);
  CHECK(classify_point(ball, make_point({1, -1})) == PointClass::IntrinsicCore);
  CHECK(classify_point(seg, make_point({0, 0})) == PointClass::Outside);  // off the line
  CHECK(classify_point(seg, make_point({1, 1})) == PointClass::IntrinsicCore);
}

TEST_CASE("convex polygon classification and validation") {
  const ConvexDomain square = ConvexPolygon2D({make_point({0, 0}), make_point({2, 0}), make_point({2, 2}),
                                               make_point({0, 2})});
  CHECK(classify_point(square, make_point({2, 2})) == PointClass::Extreme);
  CHECK(classify_point(square, make_point({1, 0})) == PointClass::Flat);
  CHECK(classify_point(square, make_point({1, 1})) == PointClass::IntrinsicCore);
  CHECK(classify_point(square, make_point({3, 1})) == PointClass::Outside);

  // clockwise, non-convex, duplicated
  CHECK_THROWS_AS(ConvexPolygon2D({make_point({0, 0}), make_point({0, 2}), make_point({2, 2})}), Error);
  CHECK_THROWS_AS(ConvexPolygon2D({make_point({0, 0}), make_point({2, 0}), make_point({1, 1}),
                                   make_point({2, 2}), make_point({0, 2})}),
                  Error);
  CHECK_THROWS_AS(ConvexPolygon2D({make_point({0, 0}), make_point({1, 0}), make_point({2, 0})}), Error);
}

TEST_CASE("domain construction errors") {
  CHECK_THROWS_AS(Segment(U, U), Error);
  CHECK_THROWS_AS(Segment(U, make_point({1, 2, 3})), Error);
  CHECK_THROWS_AS(EuclideanBall(U, 0), Error);
  CHECK_THROWS_AS(classify_point(ConvexDomain(triangle()), make_point({1})), Error);
}

TEST_CASE("segment_point") {
  CHECK(segment_point(V, U, Rational(1, 2)) == make_point({Rational(1, 2), Rational(1, 2)}));
  CHECK(segment_point(V, U, Rational(0)) == V);
  CHECK(segment_point(W, U, Rational(1, 3)) == make_point({Rational(1, 3), 0}));
  try {
    segment_point(V, U, Rational(3, 2));
    FAIL("t > 1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParameterOutOfRange);
  }
  CHECK_THROWS_AS(segment_point(V, make_point({1, 0, 0}), Rational(1, 2)), Error);
}

TEST_CASE("intersect_segments_2d") {
  const auto cross = intersect_segments_2d(W, make_point({1, 1}), V, U);
  REQUIRE(cross);
  CHECK(*cross == make_point({Rational(1, 2), Rational(1, 2)}));

  CHECK_FALSE(intersect_segments_2d(W, U, V, make_point({1, 1})));

  const Point v_s = make_point({0, Rational(1, 2)});
  const Point z_t = make_point({Rational(1, 2), Rational(1, 2)});
  const auto meet = intersect_segments_2d(U, v_s, W, z_t);
  REQUIRE(meet);
  CHECK(*meet == make_point({Rational(1, 3), Rational(1, 3)}));

  SUBCASE("collinear cases") {
    CHECK_FALSE(intersect_segments_2d(W, U, make_point({2, 0}), make_point({3, 0})));
    const auto touch = intersect_segments_2d(W, U, U, make_point({2, 0}));
    REQUIRE(touch);
    CHECK(*touch == U);
    try {
      intersect_segments_2d(W, make_point({2, 0}), U, make_point({3, 0}));
      FAIL("overlap accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CollinearOverlap);
    }
  }
  SUBCASE("lines cross outside the segments") {
    CHECK_FALSE(intersect_segments_2d(W, U, make_point({2, -1}), make_point({2, 1})));
  }
}

TEST_CASE("t_param closed form") {
  CHECK(t_param(Rational(1, 2), Rational(1, 2)) == Rational(1, 3));
  CHECK(t_param(Rational(1, 3), Rational(1, 4)) == Rational(3, 11));
  RationalGen gen(41);
  for (int i = 0; i < 50; ++i) {
    const Rational t = gen.open_unit();
    CHECK(t_param(t, Rational(0)) == t);
  }
  CHECK_THROWS_AS(t_param(Rational(0), Rational(1, 2)), Error);
  CHECK_THROWS_AS(t_param(Rational(1, 2), Rational(1)), Error);
}

TEST_CASE("t_param agrees with the intersection oracle on a grid") {
  for (int i = 1; i < 20; ++i) {
    for (int j = 1; j < 20; ++j) {
      const Rational t(i, 20), s(j, 20);
      const Point v_s = segment_point(V, W, s);
      const Point z_t = segment_point(V, U, t);
      const Rational t_s = t_param(t, s);
      const auto [alpha, beta] = testing::cramer_line_parameters(v_s, U, W, z_t);
      CHECK(alpha == t_s);
      const auto meet = intersect_segments_2d(U, v_s, W, z_t);
      REQUIRE(meet);
      CHECK(*meet == segment_point(v_s, U, t_s));
      CHECK(cross2<Rational>(z_t - W, *meet - W) == 0);
      CHECK(t_s <= t);
      CHECK(t_s < t);
      CHECK(t_s > 0);
    }
  }
}

TEST_CASE("ray_exit finds the far end of the chord") {
  const ConvexDomain C = triangle();
  const Point z = make_point({Rational(1, 4), Rational(1, 4)});
  const auto exit = ray_exit(C, W, z);
  REQUIRE(exit);
  CHECK(*exit == make_point({Rational(1, 2), Rational(1, 2)}));

  const ConvexDomain ball = EuclideanBall(make_point({0, 0}), 1);
  const auto far = ray_exit(ball, make_point({1, 0}), make_point({0, 0}));
  REQUIRE(far);
  CHECK(*far == make_point({-1, 0}));
  // from the center towards (1,1): exit at (1/sqrt2, 1/sqrt2) is irrational
  CHECK_FALSE(ray_exit(ball, make_point({0, 0}), make_point({Rational(1, 2), Rational(1, 2)})));

  const ConvexDomain square = ConvexPolygon2D({make_point({0, 0}), make_point({2, 0}), make_point({2, 2}),
                                               make_point({0, 2})});
  const auto sq = ray_exit(square, make_point({0, 0}), make_point({1, Rational(1, 2)}));
  REQUIRE(sq);
  CHECK(*sq == make_point({2, 1}));
}
