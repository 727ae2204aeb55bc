#include "convexcheck/functionals.hpp"

#include <algorithm>
#include <map>

namespace convexcheck {

LinearFunctional::LinearFunctional(VectorX<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 1) throw Error(ErrorCode::InvalidDomain, "functional needs dimension >= 1");
}

Rational pair(const LinearFunctional& c, const Point& x) {
  if (c.dimension() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch, "functional and point differ in dimension");
  }
  return c.coeffs().dot(x);
}

ConstancyResult is_constant_on(const LinearFunctional& c, const ConvexDomain& domain,
                               std::span<const Point> witnesses) {
  std::vector<Point> candidates(witnesses.begin(), witnesses.end());
  for (auto& anchor : anchor_points(domain)) candidates.push_back(std::move(anchor));
  const Point& first = candidates.front();
  const Rational reference = pair(c, first);
  for (const auto& p : candidates) {
    if (pair(c, p) != reference) return {false, std::make_pair(first, p)};
  }
  return {true, std::nullopt};
}

LinearFunctional construct_nonconstant_functional(const ConvexDomain& domain) {
  const auto anchors = anchor_points(domain);
  const Point& a = anchors.front();
  for (const auto& b : anchors) {
    if (b != a) return LinearFunctional(a - b);
  }
  throw Error(ErrorCode::SinglePointDomain, "domain has a single point");
}

FunctionOracle::FunctionOracle(std::string name, Eigen::Index dimension, Eval eval, OracleFlags flags)
    : name_(std::move(name)), dimension_(dimension), eval_(std::move(eval)), flags_(flags) {}

Rational FunctionOracle::operator()(const Point& x) const {
  if (x.size() != dimension_) {
    throw Error(ErrorCode::DimensionMismatch, "oracle " + name_ + " evaluated off its dimension");
  }
  return eval_(x);
}

FunctionOracle perturbed(const FunctionOracle& f, const Rational& lambda, const LinearFunctional& c) {
  if (f.dimension() != c.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "oracle and functional differ in dimension");
  }
  OracleFlags flags;
  flags.known_convex = f.flags().known_convex;
  return FunctionOracle(f.name() + "+(" + to_string(lambda) + ")c", f.dimension(),
                        [f, lambda, c](const Point& x) { return f(x) + lambda * pair(c, x); }, flags);
}

FunctionOracle shifted(const FunctionOracle& f, const Rational& mu) {
  return FunctionOracle(f.name() + "+(" + to_string(mu) + ")", f.dimension(),
                        [f, mu](const Point& x) { return f(x) + mu; }, f.flags());
}

FunctionOracle scaled(const FunctionOracle& f, const Rational& alpha) {
  return FunctionOracle("(" + to_string(alpha) + ")" + f.name(), f.dimension(),
                        [f, alpha](const Point& x) { return alpha * f(x); }, f.flags());
}

Simplex reference_triangle() {
  return Simplex({make_point({1, 0}), make_point({0, 1}), make_point({0, 0})});
}

namespace {

// On the reference triangle: the edge [u,v] is x1 + x2 = 1.
bool on_edge_uv(const Point& x) { return x[0] + x[1] == 1; }

Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

using FixtureFactory = Fixture (*)();

LinearFunctional sum_functional() { return LinearFunctional(make_point({1, 1})); }

constexpr OracleFlags kConvex{true, true, true};
constexpr ExpectedProfile kConvexProfile{true, true, true, false};

Fixture triangle_fixture(std::string name, std::string summary, FunctionOracle::Eval eval,
                         OracleFlags flags, ExpectedProfile expected) {
  return Fixture{name, std::move(summary), reference_triangle(),
                 FunctionOracle(name, 2, std::move(eval), flags), sum_functional(), expected};
}

const std::map<std::string, FixtureFactory, std::less<>>& registry() {
  static const std::map<std::string, FixtureFactory, std::less<>> table{
      {"remark1",
       [] {
         return triangle_fixture(
             "remark1", "1 on the half-open edge [u,v[, 0 elsewhere; every f+lc quasiconvex, not stable",
             [](const Point& x) { return Rational(on_edge_uv(x) && x[0] > 0 ? 1 : 0); },
             {false, true, false}, {false, true, false, false});
       }},
      {"remark3",
       [] {
         return triangle_fixture(
             "remark3", "0 on the open edge ]u,v[, 1 elsewhere; stable, f+lc quasiconvex only for l <= 0",
             [](const Point& x) { return Rational(on_edge_uv(x) && x[0] > 0 && x[1] > 0 ? 0 : 1); },
             {false, false, true}, {false, false, true, true});
       }},
      {"indicator_like_stable",
       [] {
         return triangle_fixture(
             "indicator_like_stable", "0 on the closed edge [u,v], 1 elsewhere; stable, not convex",
             [](const Point& x) { return Rational(on_edge_uv(x) ? 0 : 1); }, {false, false, true},
             {false, false, true, true});
       }},
      {"quadratic",
       [] {
         return triangle_fixture("quadratic", "sum of squares",
                                 [](const Point& x) { return Rational(x.squaredNorm()); }, kConvex,
                                 kConvexProfile);
       }},
      {"linear",
       [] {
         return triangle_fixture("linear", "x1 + x2, the pairing with c",
                                 [](const Point& x) { return Rational(x[0] + x[1]); }, kConvex,
                                 kConvexProfile);
       }},
      {"linear_skew",
       [] {
         return triangle_fixture("linear_skew", "x1 - x2",
                                 [](const Point& x) { return Rational(x[0] - x[1]); }, kConvex,
                                 kConvexProfile);
       }},
      {"norm1",
       [] {
         return triangle_fixture("norm1", "|x1| + |x2|",
                                 [](const Point& x) { return abs_value(x[0]) + abs_value(x[1]); },
                                 kConvex, kConvexProfile);
       }},
      {"max_affine",
       [] {
         return triangle_fixture(
             "max_affine", "max(x1, x2, 1/2 - x1 - x2)",
             [](const Point& x) {
               return std::max({Rational(x[0]), Rational(x[1]), Rational(Rational(1, 2) - x[0] - x[1])});
             },
             kConvex, kConvexProfile);
       }},
      {"weighted_quadratic",
       [] {
         return triangle_fixture(
             "weighted_quadratic", "x1^2 - x1 x2 + x2^2 + x1",
             [](const Point& x) { return Rational(x[0] * x[0] - x[0] * x[1] + x[1] * x[1] + x[0]); },
             kConvex, kConvexProfile);
       }},
      {"constant",
       [] {
         return triangle_fixture("constant", "the constant 5", [](const Point&) { return Rational(5); },
                                 kConvex, kConvexProfile);
       }},
      {"ball_quadratic",
       [] {
         return Fixture{"ball_quadratic", "sum of squares on the closed unit disk",
                        EuclideanBall(make_point({0, 0}), 1),
                        FunctionOracle("ball_quadratic", 2,
                                       [](const Point& x) { return Rational(x.squaredNorm()); }, kConvex),
                        LinearFunctional(make_point({1, 0})), kConvexProfile};
       }},
      {"segment_abs",
       [] {
         return Fixture{"segment_abs", "|x1| on the segment [(-1,1),(1,-1)]",
                        Segment(make_point({-1, 1}), make_point({1, -1})),
                        FunctionOracle("segment_abs", 2, [](const Point& x) { return abs_value(x[0]); },
                                       kConvex),
                        LinearFunctional(make_point({1, 0})), kConvexProfile};
       }},
  };
  return table;
}

}  // namespace

Fixture fixture(std::string_view name) {
  const auto& table = registry();
  const auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorCode::UnknownFixture, "no fixture named " + std::string(name));
  return it->second();
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, factory] : registry()) names.push_back(name);
  return names;
}

}  // namespace convexcheck
