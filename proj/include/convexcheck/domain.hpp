#pragma once

// Convex domains with exact membership and point classification.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "convexcheck/geometry.hpp"

namespace convexcheck {

/// Convex hull of k+1 affinely independent points in R^d, k <= d. The usual
/// full-dimensional case has d+1 vertices; a single vertex is a point domain.
class Simplex {
 public:
  explicit Simplex(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  Eigen::Index dimension() const noexcept { return vertices_.front().size(); }
  /// k, the dimension of the affine hull.
  Eigen::Index order() const noexcept { return static_cast<Eigen::Index>(vertices_.size()) - 1; }
  const MatrixX<Rational>& columns() const noexcept { return columns_; }

 private:
  std::vector<Point> vertices_;
  MatrixX<Rational> columns_;
};

class Segment {
 public:
  Segment(Point a, Point b);

  const Point& a() const noexcept { return a_; }
  const Point& b() const noexcept { return b_; }
  Eigen::Index dimension() const noexcept { return a_.size(); }

 private:
  Point a_;
  Point b_;
};

/// Strictly convex polygon, vertices listed counterclockwise.
class ConvexPolygon2D {
 public:
  explicit ConvexPolygon2D(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const noexcept { return vertices_; }

 private:
  std::vector<Point> vertices_;
};

class EuclideanBall {
 public:
  EuclideanBall(Point center, Rational radius);

  const Point& center() const noexcept { return center_; }
  const Rational& radius() const noexcept { return radius_; }
  Eigen::Index dimension() const noexcept { return center_.size(); }

 private:
  Point center_;
  Rational radius_;
};

using ConvexDomain = std::variant<Simplex, Segment, ConvexPolygon2D, EuclideanBall>;

enum class PointClass { Extreme, Flat, IntrinsicCore, Outside };

std::string_view to_string(PointClass cls) noexcept;

/// Barycentric coordinates of p with respect to the simplex vertices. May be
/// negative when p is outside; throws PointOutsideAffineHull when p is not in
/// the affine hull of a lower-dimensional simplex.
VectorX<Rational> barycentric(const Simplex& simplex, const Point& p);

Eigen::Index dimension(const ConvexDomain& domain);

bool contains(const ConvexDomain& domain, const Point& p);

PointClass classify_point(const ConvexDomain& domain, const Point& p);

/// Vertices for vertex-represented domains; center +- radius * e_i for balls.
/// Every anchor is a point of the domain.
std::vector<Point> anchor_points(const ConvexDomain& domain);

bool is_vertex_represented(const ConvexDomain& domain) noexcept;

/// Far end of the chord that starts at `from` and passes through `through`:
/// the point from + tau (through - from) of the domain with the largest tau.
/// Nullopt for balls when that point is irrational.
std::optional<Point> ray_exit(const ConvexDomain& domain, const Point& from, const Point& through);

std::string describe(const ConvexDomain& domain);

}  // namespace convexcheck
