#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "convexcheck/cli.hpp"
#include "convexcheck/report.hpp"

using namespace convexcheck;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "convexcheck");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json report_of(const Result& r) {
  Json j = Json::parse(r.out);
  j.erase("generated_at");
  return j;
}

}  // namespace

TEST_CASE("parse_rational_list") {
  CHECK(cli::parse_rational_list("1/2,3") == std::vector<Rational>{Rational(1, 2), Rational(3)});
  const auto range = cli::parse_rational_list("-1:1:1/2");
  CHECK(range == std::vector<Rational>{-1, Rational(-1, 2), 0, Rational(1, 2), 1});
  CHECK(cli::parse_rational_list("-10:10:1/2").size() == 41);
  CHECK_THROWS_AS(cli::parse_rational_list("0:1:0"), Error);
  CHECK_THROWS_AS(cli::parse_rational_list("0.5"), Error);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == cli::kUsageError);
  CHECK(invoke({"fixture", "no-such-fixture"}).code == cli::kUsageError);
  CHECK(invoke({"classify", "remark1", "--point", "0.5,0.5"}).code == cli::kUsageError);
  const auto outside = invoke({"classify", "remark1", "--point", "2,2"});
  CHECK(outside.code == cli::kUsageError);
  CHECK(outside.err.find("PointOutsideDomain") != std::string::npos);
  CHECK(invoke({"reduce", "quadratic", "--u", "1,0", "--v", "0,1", "--t", "1"}).code == cli::kUsageError);
  CHECK(invoke({"check-convex", "quadratic", "--t-grid", "1e-1"}).code == cli::kUsageError);
  CHECK(invoke({"--help"}).code == cli::kSuccess);
}

TEST_CASE("classify reports the class and barycentric coordinates") {
  const auto r = invoke({"classify", "remark1", "--point", "1/2,1/2"});
  REQUIRE(r.code == cli::kSuccess);
  const Json j = report_of(r);
  CHECK(j["schema"] == "convexcheck/1");
  CHECK(j["summary"]["class"] == "Flat");
  CHECK(j["summary"]["barycentric"] == Json::array({"1/2", "1/2", "0"}));
  CHECK(report_of(invoke({"classify", "remark1", "--point", "1,0"}))["summary"]["class"] == "Extreme");
  CHECK(report_of(invoke({"classify", "remark1", "--point", "1/4,1/4"}))["summary"]["class"] == "IntrinsicCore");
}

TEST_CASE("reduce reports case, status and conclusion") {
  const auto b = report_of(invoke({"reduce", "quadratic", "--u", "1,0", "--v", "0,1", "--t", "1/2"}));
  CHECK(b["summary"]["case"] == "B");
  CHECK(b["summary"]["status"] == "ConditionallyVerified");
  CHECK(b["summary"]["certificate_valid"] == true);
  CHECK(b["summary"]["conclusion"]["lhs"] == "1/2");
  CHECK(b["summary"]["conclusion"]["rhs"] == "1");

  const auto r3 = invoke({"reduce", "remark3", "--u", "3/4,1/4", "--v", "0,0", "--t", "1/2"});
  CHECK(r3.code == cli::kSuccess);
  const auto a = report_of(r3);
  CHECK(a["summary"]["case"] == "A");
  CHECK(a["summary"]["status"] == "Refuted");
}

TEST_CASE("fixture suite matches expected profiles") {
  for (const char* name : {"remark1", "remark3", "quadratic"}) {
    const auto r = invoke({"fixture", name, "--pairs", "30"});
    CAPTURE(name);
    CHECK(r.code == cli::kSuccess);
    CHECK(report_of(r)["summary"]["matches_expected"] == true);
  }
  // Too coarse a plan cannot see the remark3 witness, so the profile disagrees.
  const auto coarse = invoke({"fixture", "remark3", "--pairs", "3", "--resolution", "1"});
  CHECK(coarse.code == cli::kUnexpectedOutcome);
  CHECK(report_of(coarse)["summary"]["matches_expected"] == false);
}

TEST_CASE("reports are byte-identical apart from the timestamp") {
  const std::vector<std::string> args = {"fixture", "remark3", "--pairs", "20", "--source", "random", "--seed", "7"};
  CHECK(report_of(invoke(args)).dump() == report_of(invoke(args)).dump());

  const auto check = [](std::uint64_t seed) {
    return report_of(invoke({"check-convex", "quadratic", "--source", "random", "--seed", std::to_string(seed)}));
  };
  CHECK(check(1)["config"]["plan"]["seed"] == 1);
  CHECK(check(1).dump() != check(2).dump());
}

TEST_CASE("CONVEXCHECK_SEED overrides the seed flag") {
  ::setenv("CONVEXCHECK_SEED", "12345", 1);
  const auto j = report_of(invoke({"check-convex", "quadratic", "--seed", "1", "--pairs", "5"}));
  ::unsetenv("CONVEXCHECK_SEED");
  CHECK(j["config"]["plan"]["seed"] == 12345);
}

TEST_CASE("check subcommands") {
  const auto qc = report_of(invoke({"check-quasiconvex", "remark3", "--lambda", "1", "--pin", "0,0;3/4,1/4;1/2"}));
  CHECK(qc["summary"]["quasiconvex"] == "no");
  CHECK(qc["verdicts"]["quasiconvex"]["lhs"] == "3/2");

  const auto stab = report_of(invoke({"check-stability", "remark1", "--z", "1/2,1/2", "--w", "0,0"}));
  CHECK(stab["summary"]["stability"]["all_stable"] == false);
  CHECK(stab["summary"]["stability"]["label"] == "estimate");

  const auto fam = report_of(invoke({"check-family", "remark3", "--lambda-grid", "-10:0:1", "--pairs", "20"}));
  CHECK(fam["summary"]["family_quasiconvex"] == "yes-over-grid");

  const auto fals = report_of(invoke({"falsify", "quadratic", "--pairs", "20"}));
  CHECK(fals["summary"]["falsifier_witness"] == false);
}

TEST_CASE("--json writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "convexcheck_cli_test.json";
  const auto r = invoke({"classify", "remark1", "--point", "0,0", "--json", path.string()});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  CHECK(j["summary"]["class"] == "Extreme");
  std::filesystem::remove(path);
}
