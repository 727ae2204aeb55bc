#pragma once

// Sampled, exact verdicts for quasiconvexity, convexity and radial lower
// stability, plus a lambda-grid falsifier for perturbed families.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "convexcheck/functionals.hpp"

namespace convexcheck {

enum class PointSource { VertexConvexHullGrid, SeededRandomBarycentric };

struct Triple {
  Point u;
  Point v;
  Rational t;
};

/// {k/n : 1 <= k <= n-1}.
std::vector<Rational> default_t_grid(int n = 16);

/// Replaces the universal quantifier over (u, v, t). Pinned triples are
/// checked first, then every sampled pair against every t in t_grid.
struct SamplePlan {
  std::size_t pair_count = 100;
  std::vector<Rational> t_grid = default_t_grid();
  std::uint64_t seed = 0x5eedULL;
  PointSource point_source = PointSource::VertexConvexHullGrid;
  /// Denominator of the barycentric grid (grid source) or the random
  /// weight range (random source).
  int resolution = 8;
  std::vector<Triple> pinned;
};

/// Grid points: convex combinations of the anchors with weights k_i / resolution,
/// deduplicated, in lexicographic weight order.
std::vector<Point> grid_points(const ConvexDomain& domain, int resolution);

/// Distinct point pairs selected by the plan, deterministic in the seed.
/// The grid source always starts with every pair of anchor points.
std::vector<std::pair<Point, Point>> sample_pairs(const ConvexDomain& domain, const SamplePlan& plan);

/// Pinned triples followed by sample_pairs x t_grid.
std::vector<Triple> expand(const ConvexDomain& domain, const SamplePlan& plan);

struct Pass {
  std::size_t checked = 0;
};

/// lhs > rhs at z = v + t (u - v), with lhs = f(z) and rhs the bound the
/// inequality allows.
struct Violation {
  Point u;
  Point v;
  Rational t;
  Rational lhs;
  Rational rhs;
};

struct Inconclusive {
  std::string reason;
};

using Verdict = std::variant<Pass, Violation, Inconclusive>;

inline bool is_pass(const Verdict& v) { return std::holds_alternative<Pass>(v); }
inline bool is_violation(const Verdict& v) { return std::holds_alternative<Violation>(v); }

enum class Inequality { Quasiconvex, Convex };

/// Recomputes (lhs, rhs) for the given inequality at one triple.
std::pair<Rational, Rational> evaluate_inequality(const FunctionOracle& f, Inequality kind,
                                                  const Point& u, const Point& v, const Rational& t);

/// True when re-evaluating the oracle reproduces the violation exactly.
bool reproduces(const Violation& violation, const FunctionOracle& f, Inequality kind);

Verdict quasiconvex_check(const FunctionOracle& f, const ConvexDomain& domain, const SamplePlan& plan);

Verdict convex_check(const FunctionOracle& f, const ConvexDomain& domain, const SamplePlan& plan);

struct LambdaVerdict {
  Rational lambda;
  Verdict verdict;
};

struct FamilyVerdict {
  std::vector<LambdaVerdict> per_lambda;  // grid order

  bool all_pass() const;
};

FamilyVerdict family_quasiconvex_check(const FunctionOracle& f, const LinearFunctional& c,
                                       const ConvexDomain& domain, const std::vector<Rational>& lambdas,
                                       const SamplePlan& plan);

/// Finite-sample estimate of f(z) <= limsup_{t -> 0+} f(z + t (w - z)),
/// from the dyadic sequence t_k = 2^-k, k = 1..depth.
///
/// Two readings of the limsup are kept. tail_max is the largest value over
/// the tail half (k > depth/2) and settles piecewise-constant rays exactly.
/// extrapolated_limit fits a + b t + c t^2 through the last three samples
/// and reports a; it is exact when f is a polynomial of degree <= 2 along
/// the ray, which tail_max alone misses when f decreases towards z.
struct StabilityEstimate {
  Point z;
  Point w;
  int depth = 20;
  Rational value_at_z;
  Rational tail_max;
  Rational extrapolated_limit;
  Rational tolerance;  // 2^-depth, applied to the extrapolated reading only
  std::vector<std::pair<Rational, Rational>> samples;  // (t_k, f(z + t_k (w - z)))

  bool stable() const {
    return tail_max >= value_at_z || extrapolated_limit >= value_at_z - tolerance;
  }
};

StabilityEstimate radial_stability_check(const FunctionOracle& f, const ConvexDomain& domain,
                                         const Point& z, const Point& w, int depth = 20);

/// {0} followed by +-2^k for k = -6..6, by increasing magnitude.
std::vector<Rational> default_lambda_grid();

struct FalsifierWitness {
  Rational lambda;
  Violation violation;
};

/// First lambda in grid order whose perturbation fails quasiconvex_check.
std::optional<FalsifierWitness> falsify_quasiconvex(const FunctionOracle& f, const LinearFunctional& c,
                                                    const ConvexDomain& domain,
                                                    const std::vector<Rational>& lambda_grid,
                                                    const SamplePlan& plan);

}  // namespace convexcheck
