#pragma once

// Linear functionals, function oracles and the fixture registry.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "convexcheck/domain.hpp"

namespace convexcheck {

class LinearFunctional {
 public:
  explicit LinearFunctional(VectorX<Rational> coeffs);

  const VectorX<Rational>& coeffs() const noexcept { return coeffs_; }
  Eigen::Index dimension() const noexcept { return coeffs_.size(); }

 private:
  VectorX<Rational> coeffs_;
};

/// <c, x>, exact.
Rational pair(const LinearFunctional& c, const Point& x);

struct ConstancyResult {
  bool constant = true;
  /// Two points of the domain with distinct pairings, present iff !constant.
  std::optional<std::pair<Point, Point>> witness;
};

/// Exact for every supported domain: a functional is affine, so it is
/// constant on a vertex-represented set iff it agrees on all vertices, and
/// constant on a ball of positive radius iff it vanishes. Extra `witnesses`
/// are scanned first when supplied.
ConstancyResult is_constant_on(const LinearFunctional& c, const ConvexDomain& domain,
                               std::span<const Point> witnesses = {});

/// a - b for the first two distinct anchor points a, b of the domain.
LinearFunctional construct_nonconstant_functional(const ConvexDomain& domain);

struct OracleFlags {
  bool known_convex = false;
  bool known_quasiconvex_family = false;
  bool known_stable = false;
};

/// A total map from points to exact scalars. Only meaningful on the domain
/// it was built for; callers filter with contains().
class FunctionOracle {
 public:
  using Eval = std::function<Rational(const Point&)>;

  FunctionOracle(std::string name, Eigen::Index dimension, Eval eval, OracleFlags flags = {});

  Rational operator()(const Point& x) const;

  const std::string& name() const noexcept { return name_; }
  Eigen::Index dimension() const noexcept { return dimension_; }
  const OracleFlags& flags() const noexcept { return flags_; }

 private:
  std::string name_;
  Eigen::Index dimension_;
  Eval eval_;
  OracleFlags flags_;
};

/// x -> f(x) + lambda <c, x>.
FunctionOracle perturbed(const FunctionOracle& f, const Rational& lambda, const LinearFunctional& c);

/// x -> f(x) + mu.
FunctionOracle shifted(const FunctionOracle& f, const Rational& mu);

/// x -> alpha f(x).
FunctionOracle scaled(const FunctionOracle& f, const Rational& alpha);

/// What the fixture suite is expected to conclude about a fixture.
struct ExpectedProfile {
  bool convex = false;
  bool family_quasiconvex = false;
  bool stable_at_flat_points = false;
  bool falsifier_witness = false;
};

struct Fixture {
  std::string name;
  std::string summary;
  ConvexDomain domain;
  FunctionOracle f;
  LinearFunctional c;
  ExpectedProfile expected;
};

/// The triangle conv{(1,0), (0,1), (0,0)} with vertices in that order.
Simplex reference_triangle();

Fixture fixture(std::string_view name);

std::vector<std::string> fixture_names();

}  // namespace convexcheck
