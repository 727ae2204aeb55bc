#include "convexcheck/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "convexcheck/report.hpp"

namespace convexcheck::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string fixture;
  std::string lambda_grid;
  std::string lambda;
  std::size_t pairs = 100;
  std::string t_grid;
  std::uint64_t seed = 0x5eedULL;
  std::string source = "grid";
  int resolution = 8;
  int depth = 20;
  std::vector<std::string> pins;
  std::string json_path;
  bool certificates = false;
  std::string u, v, t, z, w, point;
};

constexpr const char* kDefaultFamilyGrid = "-10:10:1/2";

SamplePlan make_plan(const RunConfig& config) {
  SamplePlan plan;
  plan.pair_count = config.pairs;
  if (!config.t_grid.empty()) plan.t_grid = parse_rational_list(config.t_grid);
  plan.seed = config.seed;
  if (config.source == "grid") {
    plan.point_source = PointSource::VertexConvexHullGrid;
  } else if (config.source == "random") {
    plan.point_source = PointSource::SeededRandomBarycentric;
  } else {
    throw Error(ErrorCode::ParseError, "--source must be grid or random");
  }
  plan.resolution = config.resolution;
  for (const auto& pin : config.pins) {
    // "u;v;t", e.g. "0,0;3/4,1/4;1/2"
    const auto first = pin.find(';');
    const auto second = pin.find(';', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos) {
      throw Error(ErrorCode::ParseError, "--pin expects \"u;v;t\"");
    }
    plan.pinned.push_back(Triple{parse_point(pin.substr(0, first)),
                                 parse_point(pin.substr(first + 1, second - first - 1)),
                                 parse_rational(pin.substr(second + 1))});
  }
  return plan;
}

Json config_echo(const RunConfig& config, const SamplePlan& plan) {
  Json out;
  out["command"] = config.command;
  out["fixture"] = config.fixture;
  out["lambda_grid"] = config.lambda_grid;
  out["plan"] = to_json(plan);
  out["depth"] = config.depth;
  out["certificates"] = config.certificates;
  return out;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream out;
  out << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

Point require_point(const Fixture& fx, const std::string& text, const char* flag) {
  if (text.empty()) throw Error(ErrorCode::ParseError, std::string(flag) + " is required");
  Point p = parse_point(text);
  if (p.size() != dimension(fx.domain)) throw Error(ErrorCode::DimensionMismatch, std::string(flag));
  if (!contains(fx.domain, p)) {
    throw Error(ErrorCode::PointOutsideDomain, std::string(flag) + " " + to_string(p) + " is outside the domain");
  }
  return p;
}

std::vector<Point> flat_points(const ConvexDomain& domain, int resolution) {
  std::vector<Point> flats;
  for (auto& p : grid_points(domain, resolution)) {
    if (classify_point(domain, p) == PointClass::Flat) flats.push_back(std::move(p));
  }
  return flats;
}

Json stability_sweep(const Fixture& fx, const std::vector<Point>& zs, int depth, bool& all_stable) {
  Json points = Json::array();
  all_stable = true;
  for (const auto& z : zs) {
    for (const auto& w : anchor_points(fx.domain)) {
      if (w == z) continue;
      const auto estimate = radial_stability_check(fx.f, fx.domain, z, w, depth);
      all_stable = all_stable && estimate.stable();
      points.push_back(Json{{"z", to_json(z)},
                            {"w", to_json(w)},
                            {"stable", estimate.stable()},
                            {"value_at_z", to_json(estimate.value_at_z)},
                            {"tail_max", to_json(estimate.tail_max)},
                            {"extrapolated_limit", to_json(estimate.extrapolated_limit)}});
    }
  }
  return Json{{"label", "estimate"}, {"depth", depth}, {"all_stable", all_stable}, {"checks", std::move(points)}};
}

struct Outcome {
  Json verdicts = Json::object();
  Json certificates = nullptr;
  Json summary = Json::object();
  int exit_code = kSuccess;
};

Outcome cmd_fixture_suite(const RunConfig& config, const Fixture& fx, const SamplePlan& plan) {
  Outcome out;
  const auto lambdas = parse_rational_list(config.lambda_grid.empty() ? kDefaultFamilyGrid : config.lambda_grid);

  const Verdict convex = convex_check(fx.f, fx.domain, plan);
  const FamilyVerdict family = family_quasiconvex_check(fx.f, fx.c, fx.domain, lambdas, plan);
  bool stable = true;
  Json stability = stability_sweep(fx, flat_points(fx.domain, plan.resolution), config.depth, stable);
  const auto witness = falsify_quasiconvex(fx.f, fx.c, fx.domain, default_lambda_grid(), plan);
  ReductionOptions options;
  options.stability_depth = config.depth;
  const TheoremReport theorem = verify_convexity_via_theorem(fx.f, fx.c, fx.domain, plan, options);

  out.verdicts["convex"] = to_json(convex);
  out.verdicts["family_quasiconvex"] = to_json(family);
  out.verdicts["stability"] = stability;
  out.verdicts["falsifier"] = Json{{"lambda_grid", to_json(default_lambda_grid())},
                                   {"witness", witness ? to_json(*witness) : Json(nullptr)}};
  out.verdicts["theorem"] = to_json(theorem, false);
  if (config.certificates) out.certificates = to_json(theorem, true)["certificates"];

  Json passing = Json::array();
  Json failing = Json::array();
  for (const auto& [lambda, verdict] : family.per_lambda) {
    (is_pass(verdict) ? passing : failing).push_back(to_string(lambda));
  }
  const bool convex_pass = is_pass(convex);
  const bool theorem_refuted = theorem.aggregate == Aggregate::Refuted;
  out.summary["convex"] = convex_pass ? "yes-sampled" : "no";
  out.summary["family_quasiconvex"] = family.all_pass() ? "yes-over-grid" : "no";
  out.summary["family_passing_lambdas"] = std::move(passing);
  out.summary["family_failing_lambdas"] = std::move(failing);
  out.summary["stability"] = Json{{"label", "estimate"}, {"all_stable", stable}};
  out.summary["falsifier_witness"] = witness.has_value();
  out.summary["theorem"] = std::string(to_string(theorem.aggregate));

  const auto& expected = fx.expected;
  const bool matches = convex_pass == expected.convex && family.all_pass() == expected.family_quasiconvex &&
                       stable == expected.stable_at_flat_points &&
                       witness.has_value() == expected.falsifier_witness && theorem_refuted == !expected.convex;
  out.summary["expected_profile"] = Json{{"convex", expected.convex},
                                         {"family_quasiconvex", expected.family_quasiconvex},
                                         {"stable_at_flat_points", expected.stable_at_flat_points},
                                         {"falsifier_witness", expected.falsifier_witness}};
  out.summary["matches_expected"] = matches;
  out.exit_code = matches ? kSuccess : kUnexpectedOutcome;
  return out;
}

Outcome cmd_check(const RunConfig& config, const Fixture& fx, const SamplePlan& plan) {
  Outcome out;
  if (config.command == "check-quasiconvex") {
    const Rational lambda = config.lambda.empty() ? Rational(0) : parse_rational(config.lambda);
    const Verdict verdict = quasiconvex_check(perturbed(fx.f, lambda, fx.c), fx.domain, plan);
    out.verdicts["quasiconvex"] = to_json(verdict);
    out.verdicts["quasiconvex"]["lambda"] = to_string(lambda);
    out.summary["quasiconvex"] = is_pass(verdict) ? "yes-sampled" : is_violation(verdict) ? "no" : "unverified";
  } else if (config.command == "check-convex") {
    const Verdict verdict = convex_check(fx.f, fx.domain, plan);
    out.verdicts["convex"] = to_json(verdict);
    out.summary["convex"] = is_pass(verdict) ? "yes-sampled" : is_violation(verdict) ? "no" : "unverified";
  } else if (config.command == "check-family") {
    const auto lambdas = parse_rational_list(config.lambda_grid.empty() ? kDefaultFamilyGrid : config.lambda_grid);
    const FamilyVerdict family = family_quasiconvex_check(fx.f, fx.c, fx.domain, lambdas, plan);
    out.verdicts["family_quasiconvex"] = to_json(family);
    out.summary["family_quasiconvex"] = family.all_pass() ? "yes-over-grid" : "no";
  } else if (config.command == "check-stability") {
    if (!config.z.empty()) {
      const Point z = require_point(fx, config.z, "--z");
      const Point w = require_point(fx, config.w, "--w");
      const auto estimate = radial_stability_check(fx.f, fx.domain, z, w, config.depth);
      out.verdicts["stability"] = to_json(estimate);
      out.summary["stability"] = Json{{"label", "estimate"}, {"all_stable", estimate.stable()}};
    } else {
      bool stable = true;
      out.verdicts["stability"] = stability_sweep(fx, flat_points(fx.domain, plan.resolution), config.depth, stable);
      out.summary["stability"] = Json{{"label", "estimate"}, {"all_stable", stable}};
    }
  } else if (config.command == "falsify") {
    const auto grid = config.lambda_grid.empty() ? default_lambda_grid() : parse_rational_list(config.lambda_grid);
    const auto witness = falsify_quasiconvex(fx.f, fx.c, fx.domain, grid, plan);
    out.verdicts["falsifier"] = Json{{"lambda_grid", to_json(grid)},
                                     {"witness", witness ? to_json(*witness) : Json(nullptr)}};
    out.summary["falsifier_witness"] = witness.has_value();
  }
  return out;
}

Outcome cmd_reduce(const RunConfig& config, const Fixture& fx) {
  Outcome out;
  const Point u = require_point(fx, config.u, "--u");
  const Point v = require_point(fx, config.v, "--v");
  if (config.t.empty()) throw Error(ErrorCode::ParseError, "--t is required");
  const Rational t = parse_rational(config.t);
  ReductionOptions options;
  options.stability_depth = config.depth;
  const Certificate cert = reduce(fx.f, fx.c, fx.domain, u, v, t, options);
  const bool valid = validate_certificate(cert, fx.f, fx.c);
  out.certificates = Json::array({to_json(cert)});
  out.summary["case"] = std::holds_alternative<CaseA>(cert.proof) ? "A" : "B";
  out.summary["status"] = std::string(to_string(cert.status));
  out.summary["conclusion"] = to_json(cert.conclusion);
  out.summary["certificate_valid"] = valid;
  out.exit_code = valid ? kSuccess : kUnexpectedOutcome;
  return out;
}

Outcome cmd_classify(const RunConfig& config, const Fixture& fx) {
  Outcome out;
  if (config.point.empty()) throw Error(ErrorCode::ParseError, "--point is required");
  const Point p = parse_point(config.point);
  const PointClass cls = classify_point(fx.domain, p);
  if (cls == PointClass::Outside) {
    throw Error(ErrorCode::PointOutsideDomain, to_string(p) + " is outside the domain");
  }
  out.summary["point"] = to_json(p);
  out.summary["class"] = std::string(to_string(cls));
  if (const auto* simplex = std::get_if<Simplex>(&fx.domain)) {
    const auto coords = barycentric(*simplex, p);
    Json bary = Json::array();
    for (Eigen::Index i = 0; i < coords.size(); ++i) bary.push_back(to_string(coords[i]));
    out.summary["barycentric"] = std::move(bary);
  } else {
    out.summary["barycentric"] = nullptr;
  }
  return out;
}

void add_common_options(CLI::App& sub, RunConfig& config) {
  sub.add_option("fixture", config.fixture, "Fixture name")->required();
  sub.add_option("--pairs", config.pairs, "Number of sampled (u,v) pairs");
  sub.add_option("--t-grid", config.t_grid, "t values, \"p/q,...\" or \"first:last:step\"");
  sub.add_option("--seed", config.seed, "Sampling seed (CONVEXCHECK_SEED overrides)");
  sub.add_option("--source", config.source, "Point source: grid or random");
  sub.add_option("--resolution", config.resolution, "Barycentric grid denominator");
  sub.add_option("--depth", config.depth, "Dyadic depth of stability estimates");
  sub.add_option("--pin", config.pins, "Pinned triple \"u;v;t\" checked first (repeatable)");
  sub.add_option("--json", config.json_path, "Write the report to this path");
  sub.add_flag("--certificates", config.certificates, "Include full certificate traces");
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> values;
  if (text.find(':') != std::string_view::npos) {
    const auto a = text.find(':');
    const auto b = text.find(':', a + 1);
    if (b == std::string_view::npos) throw Error(ErrorCode::ParseError, "range must be first:last:step");
    const Rational first = parse_rational(text.substr(0, a));
    const Rational last = parse_rational(text.substr(a + 1, b - a - 1));
    const Rational step = parse_rational(text.substr(b + 1));
    if (step <= 0) throw Error(ErrorCode::ParseError, "range step must be positive");
    for (Rational x = first; x <= last; x += step) values.push_back(x);
  } else {
    while (true) {
      const auto comma = text.find(',');
      values.push_back(parse_rational(text.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  }
  if (values.empty()) throw Error(ErrorCode::ParseError, "empty list");
  return values;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"convexcheck: convexity via quasiconvexity of linear perturbations"};
  app.require_subcommand(1);

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"fixture", "Run the full suite on a fixture and compare with its expected profile"},
      {"check-quasiconvex", "Sampled quasiconvexity of f + lambda c"},
      {"check-convex", "Sampled convexity"},
      {"check-family", "Quasiconvexity of f + lambda c over a lambda grid"},
      {"check-stability", "Radial lower stability estimates"},
      {"falsify", "Search a lambda grid for a quasiconvexity violation"},
      {"reduce", "Build and validate a convexity certificate at one triple"},
      {"classify", "Classify a point of the fixture's domain"},
  };
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    add_common_options(*sub, config);
    const std::string name = spec.name;
    if (name == "fixture" || name == "check-family" || name == "falsify") {
      sub->add_option("--lambda-grid", config.lambda_grid, "lambda values, \"p/q,...\" or \"first:last:step\"");
    }
    if (name == "check-quasiconvex") sub->add_option("--lambda", config.lambda, "Perturbation weight");
    if (name == "check-stability") {
      sub->add_option("--z", config.z, "Base point z");
      sub->add_option("--w", config.w, "Ray target w");
    }
    if (name == "reduce") {
      sub->add_option("--u", config.u, "Point u")->required();
      sub->add_option("--v", config.v, "Point v")->required();
      sub->add_option("--t", config.t, "Parameter t in ]0,1[")->required();
    }
    if (name == "classify") sub->add_option("--point", config.point, "Point to classify")->required();
    sub->callback([&config, name] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (const char* env = std::getenv("CONVEXCHECK_SEED"); env != nullptr && *env != '\0') {
      config.seed = std::stoull(env, nullptr, 0);
    }
    const Fixture fx = fixture(config.fixture);
    const SamplePlan plan = make_plan(config);

    Outcome outcome;
    if (config.command == "fixture") {
      outcome = cmd_fixture_suite(config, fx, plan);
    } else if (config.command == "reduce") {
      outcome = cmd_reduce(config, fx);
    } else if (config.command == "classify") {
      outcome = cmd_classify(config, fx);
    } else {
      outcome = cmd_check(config, fx, plan);
    }

    Json report;
    report["schema"] = kReportSchema;
    report["tool_version"] = kToolVersion;
    report["generated_at"] = timestamp();
    report["config"] = config_echo(config, plan);
    report["domain"] = to_json(fx.domain);
    report["functional"] = to_json(Point(fx.c.coeffs()));
    report["verdicts"] = std::move(outcome.verdicts);
    report["certificates"] = std::move(outcome.certificates);
    report["summary"] = std::move(outcome.summary);

    const std::string text = report.dump(2) + "\n";
    if (config.json_path.empty()) {
      out << text;
    } else {
      std::ofstream file(config.json_path, std::ios::binary);
      if (!file) {
        err << "cannot write " << config.json_path << "\n";
        return kUsageError;
      }
      file << text;
    }
    return outcome.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace convexcheck::cli
