#include "convexcheck/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace convexcheck {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::PointOutsideAffineHull: return "PointOutsideAffineHull";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::CollinearOverlap: return "CollinearOverlap";
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::SinglePointDomain: return "SinglePointDomain";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::EmptyPlan: return "EmptyPlan";
    case ErrorCode::DegenerateRay: return "DegenerateRay";
    case ErrorCode::DegeneratePairing: return "DegeneratePairing";
    case ErrorCode::ConstantFunctional: return "ConstantFunctional";
    case ErrorCode::ConstantFunctionalOnDomain: return "ConstantFunctionalOnDomain";
    case ErrorCode::MalformedCertificate: return "MalformedCertificate";
    case ErrorCode::PointOutsideDomain: return "PointOutsideDomain";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

bool is_integer_literal(std::string_view text, bool allow_sign) {
  if (allow_sign && !text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

Rational integer_from(std::string_view digits) {
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  return Rational(Integer(std::string(digits)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorCode::ParseError,
                "expected an exact rational \"p/q\", got \"" + std::string(text) + "\"");
  }
  const Rational denominator = integer_from(den);
  if (denominator == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  }
  // Division canonicalizes; constructing from the raw string would not.
  return integer_from(num) / denominator;
}

std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Point parse_point(std::string_view text) {
  std::vector<Rational> coords;
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  while (true) {
    const auto comma = text.find(',');
    coords.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  Point point(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) point[static_cast<Eigen::Index>(i)] = coords[i];
  return point;
}

std::string to_string(const Point& point) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < point.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(point[i]);
  }
  return out + ")";
}

Point make_point(std::initializer_list<Rational> coords) {
  Point point(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) point[i++] = c;
  return point;
}

}  // namespace convexcheck
