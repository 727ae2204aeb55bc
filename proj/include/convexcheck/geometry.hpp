#pragma once

// Affine primitives on dense vectors, templated on the scalar type.

#include <optional>
#include <string>

#include "convexcheck/linalg.hpp"

namespace convexcheck {

template <typename Scalar>
void require_unit_interval(const Scalar& t, const char* what) {
  if (t < Scalar(0) || t > Scalar(1)) {
    throw Error(ErrorCode::ParameterOutOfRange, std::string(what) + " must lie in [0,1]");
  }
}

/// v + t (u - v) for t in [0,1].
template <typename Scalar>
VectorX<Scalar> segment_point(const VectorX<Scalar>& v, const VectorX<Scalar>& u, const Scalar& t) {
  if (v.size() != u.size()) {
    throw Error(ErrorCode::DimensionMismatch, "segment_point endpoints differ in dimension");
  }
  require_unit_interval(t, "segment parameter");
  return v + t * (u - v);
}

/// Parameter of the point where [u, v_s] meets [w, z_t], measured from v_s
/// towards u, with v_s = v + s (w - v) and z_t = v + t (u - v).
///
/// Writing the meeting point as (1 - t_s) s (w - v) + t_s (u - v) and as a
/// combination of w - v and t (u - v) gives t_s (1 - t s) = t (1 - s).
template <typename Scalar>
Scalar t_param(const Scalar& t, const Scalar& s) {
  if (!(t > Scalar(0) && t < Scalar(1))) {
    throw Error(ErrorCode::ParameterOutOfRange, "t must lie in ]0,1[");
  }
  if (!(s >= Scalar(0) && s < Scalar(1))) {
    throw Error(ErrorCode::ParameterOutOfRange, "s must lie in [0,1[");
  }
  return t * (Scalar(1) - s) / (Scalar(1) - t * s);
}

/// Intersection of the closed planar segments [a,b] and [c,d]. Returns
/// nullopt when they are disjoint and throws CollinearOverlap when they
/// share more than one point.
template <typename Scalar>
std::optional<VectorX<Scalar>> intersect_segments_2d(const VectorX<Scalar>& a,
                                                     const VectorX<Scalar>& b,
                                                     const VectorX<Scalar>& c,
                                                     const VectorX<Scalar>& d) {
  if (a.size() != 2 || b.size() != 2 || c.size() != 2 || d.size() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "intersect_segments_2d needs planar points");
  }
  if (a == b || c == d) {
    throw Error(ErrorCode::ParameterOutOfRange, "segment endpoints must be distinct");
  }
  const VectorX<Scalar> r = b - a;
  const VectorX<Scalar> q = d - c;
  const VectorX<Scalar> ac = c - a;
  const Scalar denom = cross2(r, q);
  const Scalar zero(0);
  const Scalar one(1);

  if (denom != zero) {
    const Scalar alpha = cross2(ac, q) / denom;
    const Scalar beta = cross2(ac, r) / denom;
    if (alpha < zero || alpha > one || beta < zero || beta > one) return std::nullopt;
    return VectorX<Scalar>(a + alpha * r);
  }
  if (cross2(ac, r) != zero) return std::nullopt;  // parallel, distinct lines

  // Collinear: compare the parameter intervals along r.
  const Scalar rr = r.dot(r);
  Scalar lo = ac.dot(r) / rr;
  Scalar hi = (d - a).dot(r) / rr;
  if (hi < lo) std::swap(lo, hi);
  const Scalar first = lo > zero ? lo : zero;
  const Scalar last = hi < one ? hi : one;
  if (first > last) return std::nullopt;
  if (first == last) return VectorX<Scalar>(a + first * r);
  throw Error(ErrorCode::CollinearOverlap, "segments overlap along a sub-segment");
}

/// Coordinates b with sum 1 and p = sum b_i * column_i, for affinely
/// independent columns. Nullopt when p is off their affine hull.
template <typename Scalar>
std::optional<VectorX<Scalar>> affine_coordinates(const MatrixX<Scalar>& columns,
                                                  const VectorX<Scalar>& p) {
  MatrixX<Scalar> system(columns.rows() + 1, columns.cols());
  system.topRows(columns.rows()) = columns;
  system.row(columns.rows()).setConstant(Scalar(1));
  VectorX<Scalar> rhs(p.size() + 1);
  rhs.head(p.size()) = p;
  rhs[p.size()] = Scalar(1);
  return solve_exact<Scalar>(std::move(system), std::move(rhs));
}

}  // namespace convexcheck
