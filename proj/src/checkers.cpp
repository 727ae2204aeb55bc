#include "convexcheck/checkers.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace convexcheck {

namespace {

// std::uniform_int_distribution is implementation-defined; plans must
// replay identically on every standard library.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

void for_each_composition(int parts, int total, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> weights(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> recurse = [&](int index, int remaining) {
    if (index == parts - 1) {
      weights[static_cast<std::size_t>(index)] = remaining;
      visit(weights);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      weights[static_cast<std::size_t>(index)] = k;
      recurse(index + 1, remaining - k);
    }
  };
  recurse(0, total);
}

Point combine(const std::vector<Point>& anchors, const std::vector<int>& weights, int total) {
  Point p = Point::Zero(anchors.front().size());
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    if (weights[i] != 0) p += Rational(weights[i], total) * anchors[i];
  }
  return p;
}

Point random_point(const std::vector<Point>& anchors, std::mt19937_64& rng, int range) {
  std::vector<int> weights(anchors.size());
  int total = 0;
  while (total == 0) {
    total = 0;
    for (auto& w : weights) {
      w = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(range) + 1));
      total += w;
    }
  }
  return combine(anchors, weights, total);
}

Verdict run_check(const FunctionOracle& f, Inequality kind, const ConvexDomain& domain,
                  const SamplePlan& plan) {
  if (plan.t_grid.empty() && plan.pinned.empty()) throw Error(ErrorCode::EmptyPlan, "plan has no t values");
  for (const auto& t : plan.t_grid) {
    if (!(t > 0 && t < 1)) throw Error(ErrorCode::ParameterOutOfRange, "t grid values must lie in ]0,1[");
  }
  const auto triples = expand(domain, plan);
  if (triples.empty()) throw Error(ErrorCode::EmptyPlan, "plan expands to no triples");
  for (const auto& [u, v, t] : triples) {
    if (!contains(domain, u) || !contains(domain, v)) {
      return Inconclusive{"sample point outside the domain: " + to_string(u) + " / " + to_string(v)};
    }
    if (!(t > 0 && t < 1)) return Inconclusive{"pinned t outside ]0,1[: " + to_string(t)};
    auto [lhs, rhs] = evaluate_inequality(f, kind, u, v, t);
    if (lhs > rhs) return Violation{u, v, t, std::move(lhs), std::move(rhs)};
  }
  return Pass{triples.size()};
}

}  // namespace

std::vector<Rational> default_t_grid(int n) {
  std::vector<Rational> grid;
  for (int k = 1; k < n; ++k) grid.emplace_back(k, n);
  return grid;
}

std::vector<Point> grid_points(const ConvexDomain& domain, int resolution) {
  if (resolution < 1) throw Error(ErrorCode::ParameterOutOfRange, "grid resolution must be >= 1");
  const auto anchors = anchor_points(domain);
  std::vector<Point> points;
  for_each_composition(static_cast<int>(anchors.size()), resolution, [&](const std::vector<int>& w) {
    Point p = combine(anchors, w, resolution);
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(std::move(p));
  });
  return points;
}

std::vector<std::pair<Point, Point>> sample_pairs(const ConvexDomain& domain, const SamplePlan& plan) {
  std::mt19937_64 rng(plan.seed);
  std::vector<std::pair<Point, Point>> pairs;
  if (plan.pair_count == 0) return pairs;

  if (plan.point_source == PointSource::SeededRandomBarycentric) {
    const auto anchors = anchor_points(domain);
    while (pairs.size() < plan.pair_count) {
      Point a = random_point(anchors, rng, plan.resolution);
      Point b = random_point(anchors, rng, plan.resolution);
      if (a != b) pairs.emplace_back(std::move(a), std::move(b));
    }
    return pairs;
  }

  const auto points = grid_points(domain, plan.resolution);
  const auto anchors = anchor_points(domain);
  std::vector<std::pair<std::size_t, std::size_t>> rest;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const bool anchor_pair = std::find(anchors.begin(), anchors.end(), points[i]) != anchors.end() &&
                               std::find(anchors.begin(), anchors.end(), points[j]) != anchors.end();
      if (anchor_pair) {
        if (pairs.size() < plan.pair_count) pairs.emplace_back(points[i], points[j]);
      } else {
        rest.emplace_back(i, j);
      }
    }
  }
  // Partial Fisher-Yates over the remaining pairs.
  for (std::size_t k = 0; k < rest.size() && pairs.size() < plan.pair_count; ++k) {
    const std::size_t pick = k + static_cast<std::size_t>(bounded(rng, rest.size() - k));
    std::swap(rest[k], rest[pick]);
    pairs.emplace_back(points[rest[k].first], points[rest[k].second]);
  }
  return pairs;
}

std::vector<Triple> expand(const ConvexDomain& domain, const SamplePlan& plan) {
  std::vector<Triple> triples = plan.pinned;
  for (const auto& [u, v] : sample_pairs(domain, plan)) {
    for (const auto& t : plan.t_grid) triples.push_back(Triple{u, v, t});
  }
  return triples;
}

std::pair<Rational, Rational> evaluate_inequality(const FunctionOracle& f, Inequality kind,
                                                  const Point& u, const Point& v, const Rational& t) {
  const Rational fu = f(u);
  const Rational fv = f(v);
  const Rational fz = f(segment_point(v, u, t));
  if (kind == Inequality::Quasiconvex) return {fz, std::max(fu, fv)};
  return {fz, fv + t * (fu - fv)};
}

bool reproduces(const Violation& violation, const FunctionOracle& f, Inequality kind) {
  const auto [lhs, rhs] = evaluate_inequality(f, kind, violation.u, violation.v, violation.t);
  return lhs == violation.lhs && rhs == violation.rhs && lhs > rhs;
}

Verdict quasiconvex_check(const FunctionOracle& f, const ConvexDomain& domain, const SamplePlan& plan) {
  return run_check(f, Inequality::Quasiconvex, domain, plan);
}

Verdict convex_check(const FunctionOracle& f, const ConvexDomain& domain, const SamplePlan& plan) {
  return run_check(f, Inequality::Convex, domain, plan);
}

bool FamilyVerdict::all_pass() const {
  return std::all_of(per_lambda.begin(), per_lambda.end(),
                     [](const LambdaVerdict& lv) { return is_pass(lv.verdict); });
}

FamilyVerdict family_quasiconvex_check(const FunctionOracle& f, const LinearFunctional& c,
                                       const ConvexDomain& domain, const std::vector<Rational>& lambdas,
                                       const SamplePlan& plan) {
  if (lambdas.empty()) throw Error(ErrorCode::EmptyPlan, "lambda grid is empty");
  FamilyVerdict result;
  for (const auto& lambda : lambdas) {
    result.per_lambda.push_back({lambda, quasiconvex_check(perturbed(f, lambda, c), domain, plan)});
  }
  return result;
}

StabilityEstimate radial_stability_check(const FunctionOracle& f, const ConvexDomain& domain,
                                         const Point& z, const Point& w, int depth) {
  require_same_dimension(z, w, "radial_stability_check");
  if (z == w) throw Error(ErrorCode::DegenerateRay, "ray direction w - z is zero");
  if (depth < 1) throw Error(ErrorCode::ParameterOutOfRange, "depth must be >= 1");
  if (!contains(domain, z) || !contains(domain, w)) {
    throw Error(ErrorCode::PointOutsideDomain, "z and w must lie in the domain");
  }
  StabilityEstimate estimate{z, w, depth, f(z), Rational(0), Rational(0), Rational(0), {}};
  Rational t(1);
  std::optional<Rational> tail_max;
  for (int k = 1; k <= depth; ++k) {
    t /= 2;
    Rational value = f(segment_point(z, w, t));
    if (k > depth / 2 && (!tail_max || value > *tail_max)) tail_max = value;
    estimate.samples.emplace_back(t, std::move(value));
  }
  estimate.tail_max = *tail_max;
  estimate.tolerance = t;
  const auto& samples = estimate.samples;
  if (samples.size() >= 3) {
    const auto n = samples.size();
    estimate.extrapolated_limit =
        (8 * samples[n - 1].second - 6 * samples[n - 2].second + samples[n - 3].second) / 3;
  } else {
    estimate.extrapolated_limit = estimate.tail_max;
  }
  return estimate;
}

std::vector<Rational> default_lambda_grid() {
  std::vector<Rational> grid{Rational(0)};
  for (int k = -6; k <= 6; ++k) {
    const Rational magnitude = k < 0 ? Rational(1, 1 << -k) : Rational(1 << k);
    grid.push_back(magnitude);
    grid.push_back(-magnitude);
  }
  return grid;
}

std::optional<FalsifierWitness> falsify_quasiconvex(const FunctionOracle& f, const LinearFunctional& c,
                                                    const ConvexDomain& domain,
                                                    const std::vector<Rational>& lambda_grid,
                                                    const SamplePlan& plan) {
  for (const auto& lambda : lambda_grid) {
    auto verdict = quasiconvex_check(perturbed(f, lambda, c), domain, plan);
    if (auto* violation = std::get_if<Violation>(&verdict)) {
      return FalsifierWitness{lambda, std::move(*violation)};
    }
  }
  return std::nullopt;
}

}  // namespace convexcheck
