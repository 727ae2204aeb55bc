#include "convexcheck/domain.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

namespace convexcheck {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_uniform_dimension(const std::vector<Point>& points) {
  for (const auto& p : points) require_same_dimension(points.front(), p, "domain vertices");
}

// Largest tau with base + tau * delta >= 0 componentwise, over the components
// where delta is negative. Nullopt when no component bounds tau.
std::optional<Rational> exit_parameter(const VectorX<Rational>& base, const VectorX<Rational>& delta) {
  std::optional<Rational> best;
  for (Eigen::Index i = 0; i < base.size(); ++i) {
    if (delta[i] < 0) {
      const Rational tau = -base[i] / delta[i];
      if (!best || tau < *best) best = tau;
    }
  }
  return best;
}

// Signed distances (up to scale) of p to each polygon edge line; positive inside.
VectorX<Rational> edge_slacks(const ConvexPolygon2D& polygon, const Point& p) {
  const auto& vs = polygon.vertices();
  const auto n = static_cast<Eigen::Index>(vs.size());
  VectorX<Rational> slack(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point& a = vs[static_cast<std::size_t>(i)];
    const Point& b = vs[static_cast<std::size_t>((i + 1) % n)];
    slack[i] = cross2<Rational>(b - a, p - a);
  }
  return slack;
}

// Parameter of p along [a,b] if p lies on the line through a and b.
std::optional<Rational> line_parameter(const Segment& segment, const Point& p) {
  const Point direction = segment.b() - segment.a();
  const Rational tau = (p - segment.a()).dot(direction) / direction.squaredNorm();
  if (segment.a() + tau * direction != p) return std::nullopt;
  return tau;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (value < 0) return std::nullopt;
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  const Integer rn = boost::multiprecision::sqrt(num);
  const Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn) / Rational(rd);
}

}  // namespace

Simplex::Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty() || vertices_.front().size() < 1) {
    throw Error(ErrorCode::InvalidDomain, "simplex needs at least one vertex of dimension >= 1");
  }
  require_uniform_dimension(vertices_);
  const Eigen::Index d = vertices_.front().size();
  const Eigen::Index k = order();
  if (k > d) {
    throw Error(ErrorCode::DegenerateSimplex, "more than d+1 vertices cannot be affinely independent");
  }
  columns_.resize(d, k + 1);
  for (Eigen::Index j = 0; j <= k; ++j) columns_.col(j) = vertices_[static_cast<std::size_t>(j)];
  if (k > 0) {
    MatrixX<Rational> differences(d, k);
    for (Eigen::Index j = 0; j < k; ++j) differences.col(j) = columns_.col(j + 1) - columns_.col(0);
    if (exact_rank(differences) != k) {
      throw Error(ErrorCode::DegenerateSimplex, "vertices are affinely dependent");
    }
  }
}

Segment::Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b)) {
  require_same_dimension(a_, b_, "segment endpoints");
  if (a_.size() < 1) throw Error(ErrorCode::InvalidDomain, "segment needs dimension >= 1");
  if (a_ == b_) throw Error(ErrorCode::InvalidDomain, "segment endpoints must be distinct");
}

ConvexPolygon2D::ConvexPolygon2D(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw Error(ErrorCode::InvalidDomain, "polygon needs >= 3 vertices");
  require_uniform_dimension(vertices_);
  if (vertices_.front().size() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "polygon vertices must be planar");
  }
  const std::size_t n = vertices_.size();
  // Every other vertex strictly left of every edge: distinct, convex
  // position, counterclockwise, and winding once.
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    if (a == b) throw Error(ErrorCode::InvalidDomain, "polygon vertices must be distinct");
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (cross2<Rational>(b - a, vertices_[j] - a) <= 0) {
        throw Error(ErrorCode::InvalidDomain,
                    "polygon vertices must be in strictly convex counterclockwise position");
      }
    }
  }
}

EuclideanBall::EuclideanBall(Point center, Rational radius)
    : center_(std::move(center)), radius_(std::move(radius)) {
  if (center_.size() < 1) throw Error(ErrorCode::InvalidDomain, "ball needs dimension >= 1");
  if (radius_ <= 0) throw Error(ErrorCode::InvalidDomain, "ball radius must be positive");
}

std::string_view to_string(PointClass cls) noexcept {
  switch (cls) {
    case PointClass::Extreme: return "Extreme";
    case PointClass::Flat: return "Flat";
    case PointClass::IntrinsicCore: return "IntrinsicCore";
    case PointClass::Outside: return "Outside";
  }
  return "Unknown";
}

VectorX<Rational> barycentric(const Simplex& simplex, const Point& p) {
  if (p.size() != simplex.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "point and simplex differ in dimension");
  }
  auto coords = affine_coordinates(simplex.columns(), p);
  if (!coords) throw Error(ErrorCode::PointOutsideAffineHull, "point is off the simplex's affine hull");
  return *coords;
}

Eigen::Index dimension(const ConvexDomain& domain) {
  return std::visit(overloaded{
                        [](const ConvexPolygon2D&) -> Eigen::Index { return 2; },
                        [](const auto& d) -> Eigen::Index { return d.dimension(); },
                    },
                    domain);
}

bool contains(const ConvexDomain& domain, const Point& p) {
  return classify_point(domain, p) != PointClass::Outside;
}

PointClass classify_point(const ConvexDomain& domain, const Point& p) {
  if (p.size() != dimension(domain)) {
    throw Error(ErrorCode::DimensionMismatch, "point and domain differ in dimension");
  }
  return std::visit(
      overloaded{
          [&](const Simplex& s) {
            const auto coords = affine_coordinates(s.columns(), p);
            if (!coords) return PointClass::Outside;
            if ((coords->array() < 0).any()) return PointClass::Outside;
            if ((coords->array() == 1).any()) return PointClass::Extreme;
            if ((coords->array() > 0).all()) return PointClass::IntrinsicCore;
            return PointClass::Flat;
          },
          [&](const Segment& s) {
            const auto tau = line_parameter(s, p);
            if (!tau || *tau < 0 || *tau > 1) return PointClass::Outside;
            if (*tau == 0 || *tau == 1) return PointClass::Extreme;
            return PointClass::IntrinsicCore;
          },
          [&](const ConvexPolygon2D& poly) {
            const auto slack = edge_slacks(poly, p);
            if ((slack.array() < 0).any()) return PointClass::Outside;
            if (std::find(poly.vertices().begin(), poly.vertices().end(), p) != poly.vertices().end()) {
              return PointClass::Extreme;
            }
            if ((slack.array() == 0).any()) return PointClass::Flat;
            return PointClass::IntrinsicCore;
          },
          [&](const EuclideanBall& b) {
            const Rational sq = (p - b.center()).squaredNorm();
            const Rational r2 = b.radius() * b.radius();
            if (sq > r2) return PointClass::Outside;
            if (sq == r2) return PointClass::Extreme;
            return PointClass::IntrinsicCore;
          },
      },
      domain);
}

std::vector<Point> anchor_points(const ConvexDomain& domain) {
  return std::visit(overloaded{
                        [](const Simplex& s) { return s.vertices(); },
                        [](const Segment& s) { return std::vector<Point>{s.a(), s.b()}; },
                        [](const ConvexPolygon2D& p) { return p.vertices(); },
                        [](const EuclideanBall& b) {
                          std::vector<Point> anchors;
                          for (Eigen::Index i = 0; i < b.dimension(); ++i) {
                            Point step = Point::Zero(b.dimension());
                            step[i] = b.radius();
                            anchors.push_back(b.center() + step);
                            anchors.push_back(b.center() - step);
                          }
                          return anchors;
                        },
                    },
                    domain);
}

bool is_vertex_represented(const ConvexDomain& domain) noexcept {
  return !std::holds_alternative<EuclideanBall>(domain);
}

std::optional<Point> ray_exit(const ConvexDomain& domain, const Point& from, const Point& through) {
  require_same_dimension(from, through, "ray_exit");
  if (from == through) throw Error(ErrorCode::DegenerateRay, "ray needs two distinct points");
  const Point direction = through - from;
  const auto tau = std::visit(
      overloaded{
          [&](const Simplex& s) -> std::optional<Rational> {
            const auto b_from = barycentric(s, from);
            const auto b_through = barycentric(s, through);
            return exit_parameter(b_from, b_through - b_from);
          },
          [&](const Segment& s) -> std::optional<Rational> {
            const auto a = line_parameter(s, from);
            const auto b = line_parameter(s, through);
            if (!a || !b) return std::nullopt;
            VectorX<Rational> base(2), delta(2);
            base << *a, 1 - *a;
            delta << *b - *a, *a - *b;
            return exit_parameter(base, delta);
          },
          [&](const ConvexPolygon2D& poly) -> std::optional<Rational> {
            const auto h_from = edge_slacks(poly, from);
            return exit_parameter(h_from, edge_slacks(poly, through) - h_from);
          },
          [&](const EuclideanBall& b) -> std::optional<Rational> {
            // |from - c + tau d|^2 = r^2, larger root.
            const Point offset = from - b.center();
            const Rational qa = direction.squaredNorm();
            const Rational qb = 2 * offset.dot(direction);
            const Rational qc = offset.squaredNorm() - b.radius() * b.radius();
            const auto root = exact_sqrt(qb * qb - 4 * qa * qc);
            if (!root) return std::nullopt;
            return (-qb + *root) / (2 * qa);
          },
      },
      domain);
  if (!tau) return std::nullopt;
  return Point(from + *tau * direction);
}

std::string describe(const ConvexDomain& domain) {
  auto list = [](const std::vector<Point>& points) {
    std::string out;
    for (const auto& p : points) out += (out.empty() ? "" : ",") + to_string(p);
    return out;
  };
  return std::visit(overloaded{
                        [&](const Simplex& s) { return "simplex{" + list(s.vertices()) + "}"; },
                        [&](const Segment& s) {
                          return "segment{" + to_string(s.a()) + "," + to_string(s.b()) + "}";
                        },
                        [&](const ConvexPolygon2D& p) { return "polygon{" + list(p.vertices()) + "}"; },
                        [&](const EuclideanBall& b) {
                          return "ball{" + to_string(b.center()) + ";" + to_string(b.radius()) + "}";
                        },
                    },
                    domain);
}

}  // namespace convexcheck
