#pragma once

// Exact rational scalars and the dense vector types built on them.
//
// Every quantity in the toolkit (points, pairings, function values, the
// parameters t, s, lambda) is a Rational unless a routine is explicitly
// templated on its scalar type.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <initializer_list>
#include <string>
#include <string_view>

#include "convexcheck/error.hpp"

namespace convexcheck {

// Expression templates are disabled: Eigen's own expression machinery
// composes badly with a second layer of lazy number types.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Point = VectorX<Rational>;

/// Parses "p/q" or "p" (optional sign). Decimal and exponent notation are
/// rejected so that no input is silently rounded.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Comma separated rationals, e.g. "1/2,1/2".
Point parse_point(std::string_view text);

std::string to_string(const Point& point);

Point make_point(std::initializer_list<Rational> coords);


inline void require_same_dimension(const Point& a, const Point& b, std::string_view what) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": " + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()));
  }
}

}  // namespace convexcheck
