#pragma once

// Test-only generators and independent oracles. Nothing here calls the
// library routine it is used to check.

#include <array>
#include <random>
#include <utility>
#include <vector>

#include "convexcheck/scalar.hpp"

namespace convexcheck::testing {

class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  /// p/q with |p| <= range, 1 <= q <= max_den.
  Rational any(int range = 20, int max_den = 12) {
    const auto p = static_cast<long>(rng_() % static_cast<std::uint64_t>(2 * range + 1)) - range;
    const auto q = static_cast<long>(rng_() % static_cast<std::uint64_t>(max_den)) + 1;
    return Rational(p) / Rational(q);
  }

  /// Uniform-ish in ]0,1[ with denominator <= max_den.
  Rational open_unit(int max_den = 64) {
    const auto q = static_cast<long>(rng_() % static_cast<std::uint64_t>(max_den - 1)) + 2;
    const auto p = static_cast<long>(rng_() % static_cast<std::uint64_t>(q - 1)) + 1;
    return Rational(p, q);
  }

  /// Nonnegative weights summing to one, some possibly zero.
  std::vector<Rational> weights(std::size_t n, int range = 6) {
    std::vector<long> raw(n);
    long total = 0;
    while (total == 0) {
      total = 0;
      for (auto& r : raw) {
        r = static_cast<long>(rng_() % static_cast<std::uint64_t>(range + 1));
        total += r;
      }
    }
    std::vector<Rational> out;
    for (auto r : raw) out.push_back(Rational(r) / Rational(total));
    return out;
  }

  /// A point of the triangle conv{(1,0),(0,1),(0,0)}.
  Point triangle_point(int range = 6) {
    const auto w = weights(3, range);
    Point p(2);
    p << w[0], w[1];
    return p;
  }

  std::uint64_t next() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

inline Rational det3(const Rational (&m)[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Barycentric coordinates in a planar triangle by Cramer's rule on the
/// 3x3 system [a b c; 1 1 1] x = [p; 1].
inline std::array<Rational, 3> cramer_barycentric(const Point& a, const Point& b, const Point& c,
                                                  const Point& p) {
  const Rational m[3][3] = {{a[0], b[0], c[0]}, {a[1], b[1], c[1]}, {1, 1, 1}};
  const Rational rhs[3] = {p[0], p[1], 1};
  const Rational d = det3(m);
  std::array<Rational, 3> out;
  for (int col = 0; col < 3; ++col) {
    Rational mc[3][3];
    for (int r = 0; r < 3; ++r) {
      for (int k = 0; k < 3; ++k) mc[r][k] = k == col ? rhs[r] : m[r][k];
    }
    out[static_cast<std::size_t>(col)] = det3(mc) / d;
  }
  return out;
}

/// Parameters (alpha, beta) with a + alpha (b - a) = c + beta (d - c), by
/// Cramer's rule on the 2x2 system. Requires non-parallel lines.
inline std::pair<Rational, Rational> cramer_line_parameters(const Point& a, const Point& b, const Point& c,
                                                            const Point& d) {
  // alpha (b - a) - beta (d - c) = c - a
  const Rational m00 = b[0] - a[0], m01 = -(d[0] - c[0]);
  const Rational m10 = b[1] - a[1], m11 = -(d[1] - c[1]);
  const Rational r0 = c[0] - a[0], r1 = c[1] - a[1];
  const Rational det = m00 * m11 - m01 * m10;
  return {(r0 * m11 - m01 * r1) / det, (m00 * r1 - r0 * m10) / det};
}

}  // namespace convexcheck::testing
