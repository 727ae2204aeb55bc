#pragma once

// JSON encoding of verdicts, estimates and certificates. Every number is
// written as an exact "p/q" string; key order is fixed so equal inputs give
// byte-identical reports.

#include <json.hpp>

#include "convexcheck/reduction.hpp"

namespace convexcheck {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "convexcheck/1";
inline constexpr const char* kToolVersion = "1.0.0";

Json to_json(const Rational& value);
Json to_json(const Point& point);
Json to_json(const std::vector<Rational>& values);
Json to_json(const ConvexDomain& domain);
Json to_json(const SamplePlan& plan);
Json to_json(const Verdict& verdict);
Json to_json(const FamilyVerdict& verdict);
Json to_json(const StabilityEstimate& estimate);
Json to_json(const FalsifierWitness& witness);
Json to_json(const InequalityRecord& record);
Json to_json(const CaseAStep& step);
Json to_json(const Certificate& cert);
/// Summary counts always; full certificates only when requested.
Json to_json(const TheoremReport& report, bool with_certificates);

}  // namespace convexcheck
