#include "coreline/geodesic.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace coreline {

namespace {

// Trace-zero matrix whose Möbius fixed points are the ends of g, up to scale.
// Proper [u, v]:  [[u+v, -2uv], [2, -(u+v)]]   (det −(u−v)²)
// [u, ∞]:         [[1, -2u], [0, -1]]
// [p, p]:         [[2p, -2p²], [2, -2p]]       (nilpotent)
// [∞, ∞]:         [[0, 1], [0, 0]]
Mat2 line_generator(const Geodesic& g) {
  const BoundaryPoint& p = g.e1();
  const BoundaryPoint& q = g.e2();
  if (g.is_degenerate()) {
    if (p.is_infinite()) return {0.0, 1.0, 0.0, 0.0};
    const Complex z = p.value();
    return {2.0 * z, -2.0 * z * z, 2.0, -2.0 * z};
  }
  if (q.is_infinite()) {
    const Complex u = p.value();
    return {1.0, -2.0 * u, 0.0, -1.0};
  }
  const Complex u = p.value();
  const Complex v = q.value();
  return {u + v, -2.0 * u * v, 2.0, -(u + v)};
}

Mat2 unit_scaled(const Mat2& m) { return m / Complex(m.max_abs()); }

}  // namespace

Geodesic::Geodesic(const BoundaryPoint& p, const BoundaryPoint& q, bool degenerate)
    : e1_(p), e2_(q), degenerate_(degenerate) {
  if (lex_less(e2_, e1_)) std::swap(e1_, e2_);
}

Geodesic Geodesic::between(const BoundaryPoint& p, const BoundaryPoint& q, const Tolerances& tol) {
  if (chordal_distance(p, q) <= tol.geo) {
    throw Error(ErrorCode::DegenerateGeodesic, "geodesic ends coincide");
  }
  return Geodesic(p, q, false);
}

Geodesic Geodesic::point(const BoundaryPoint& p) { return Geodesic(p, p, true); }

Geodesic axis(const GroupElement& g, const Tolerances& tol) {
  const FixedPoints fp = fixed_points(g, tol);
  if (fp.parabolic) return Geodesic::point(fp.first);
  return Geodesic::between(fp.first, fp.second, tol);
}

Geodesic transform(const GroupElement& m, const Geodesic& g, const Tolerances& tol) {
  if (g.is_degenerate()) return Geodesic::point(m.apply(g.e1()));
  return Geodesic::between(m.apply(g.e1()), m.apply(g.e2()), tol);
}

double endpoint_distance(const Geodesic& g, const Geodesic& h) {
  const double same = std::max(chordal_distance(g.e1(), h.e1()), chordal_distance(g.e2(), h.e2()));
  const double cross = std::max(chordal_distance(g.e1(), h.e2()), chordal_distance(g.e2(), h.e1()));
  return std::min(same, cross);
}

GroupElement line_matrix(const Geodesic& g) {
  if (g.is_degenerate()) {
    throw Error(ErrorCode::DegenerateGeodesic, "a degenerate line has no half-turn");
  }
  const Mat2 m = line_generator(g);
  // det m = −(u − v)² (or −1 for [u, ∞]); dividing by sqrt(det) makes it unimodular.
  return GroupElement::from_unimodular(m / std::sqrt(m.det()));
}

GroupElement half_turn_conjugate(const Geodesic& axis, const GroupElement& g) {
  const GroupElement h = line_matrix(axis);
  return h * g * h.inverse();
}

double orthogonality_residual(const Geodesic& g1, const Geodesic& g2) {
  return std::abs((line_matrix(g1) * line_matrix(g2)).trace());
}

bool are_orthogonal(const Geodesic& g1, const Geodesic& g2, const Tolerances& tol) {
  return orthogonality_residual(g1, g2) < tol.geo;
}

Geodesic common_perpendicular(const Geodesic& g1, const Geodesic& g2, const Tolerances& tol) {
  const Mat2 l1 = unit_scaled(line_generator(g1));
  const Mat2 l2 = unit_scaled(line_generator(g2));
  const Mat2 comm = l1 * l2 - l2 * l1;
  // A shared end makes the commutator nilpotent (or zero when the lines agree).
  if (comm.max_abs() <= tol.cls || std::abs(comm.det()) <= tol.cls * comm.max_abs() * comm.max_abs()) {
    throw Error(ErrorCode::SharedEndpoint, "geodesics share an end");
  }
  const GroupElement line = GroupElement::from_unimodular(comm / std::sqrt(comm.det()));
  const FixedPoints fp = fixed_points(line, tol);
  return Geodesic::between(fp.first, fp.second, tol);
}

double antipodality_residual(const BoundaryPoint& x1, const BoundaryPoint& x2) {
  if (x1.is_infinite() || x2.is_infinite()) return std::numeric_limits<double>::infinity();
  return std::abs(x1.value() + x2.value()) / std::max(1.0, std::abs(x1.value()));
}

double position_on_vertical_axis(const Geodesic& g, const Tolerances& tol) {
  if (g.is_degenerate()) {
    throw Error(ErrorCode::DegenerateGeodesic, "degenerate line has no crossing point");
  }
  if (antipodality_residual(g.e1(), g.e2()) > tol.geo) {
    throw Error(ErrorCode::NotOrthogonal, "geodesic is not orthogonal to [0, inf]");
  }
  const double r1 = std::abs(g.e1().value());
  const double r2 = std::abs(g.e2().value());
  if (r1 == 0.0 || r2 == 0.0) {
    throw Error(ErrorCode::NotOrthogonal, "geodesic ends at the origin");
  }
  return 0.5 * (std::log(r1) + std::log(r2));
}

}  // namespace coreline
