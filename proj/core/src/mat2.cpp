#include "coreline/mat2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace coreline {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::IdentityElement: return "IdentityElement";
    case ErrorCode::DegenerateGeodesic: return "DegenerateGeodesic";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::SharedEndpoint: return "SharedEndpoint";
    case ErrorCode::InvalidRational: return "InvalidRational";
    case ErrorCode::SchemeViolation: return "SchemeViolation";
    case ErrorCode::ElementaryGroup: return "ElementaryGroup";
    case ErrorCode::NotPalindrome: return "NotPalindrome";
    case ErrorCode::IdentityImage: return "IdentityImage";
    case ErrorCode::OrthogonalityViolation: return "OrthogonalityViolation";
    case ErrorCode::CommutingPair: return "CommutingPair";
    case ErrorCode::TrivialPalindromization: return "TrivialPalindromization";
    case ErrorCode::DegenerateAxis: return "DegenerateAxis";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(IsometryClass cls) {
  switch (cls) {
    case IsometryClass::Identity: return "identity";
    case IsometryClass::Parabolic: return "parabolic";
    case IsometryClass::Elliptic: return "elliptic";
    case IsometryClass::Loxodromic: return "loxodromic";
  }
  return "unknown";
}

double chordal_distance(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.is_infinite() && q.is_infinite()) return 0.0;
  if (p.is_infinite() || q.is_infinite()) {
    const Complex z = p.is_infinite() ? q.value() : p.value();
    return 2.0 / std::sqrt(1.0 + std::norm(z));
  }
  const Complex z = p.value();
  const Complex w = q.value();
  return 2.0 * std::abs(z - w) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

bool lex_less(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.is_infinite()) return false;
  if (q.is_infinite()) return true;
  const Complex z = p.value();
  const Complex w = q.value();
  if (z.real() != w.real()) return z.real() < w.real();
  return z.imag() < w.imag();
}

double Mat2::max_abs() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

bool Mat2::is_finite() const {
  for (const Complex& z : {a, b, c, d}) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

GroupElement GroupElement::normalize(const Mat2& m, const Tolerances& tol) {
  if (!m.is_finite()) throw Error(ErrorCode::SingularMatrix, "matrix has non-finite entries");
  const double scale = m.max_abs();
  const Complex det = m.det();
  if (scale == 0.0 || std::abs(det) <= tol.det * scale * scale) {
    throw Error(ErrorCode::SingularMatrix, "determinant is negligible");
  }
  return GroupElement(m / std::sqrt(det));
}

BoundaryPoint GroupElement::apply(const BoundaryPoint& z) const {
  if (z.is_infinite()) {
    if (m_.c == Complex{}) return BoundaryPoint::infinity();
    return m_.a / m_.c;
  }
  const Complex den = m_.c * z.value() + m_.d;
  if (den == Complex{}) return BoundaryPoint::infinity();
  return (m_.a * z.value() + m_.b) / den;
}

GroupElement power(const GroupElement& g, int n) {
  GroupElement base = n < 0 ? g.inverse() : g;
  unsigned k = static_cast<unsigned>(n < 0 ? -n : n);
  GroupElement result;
  while (k != 0) {
    if (k & 1U) result = result * base;
    base = base * base;
    k >>= 1U;
  }
  return result;
}

double psl_distance(const Mat2& g, const Mat2& h) {
  const double plus = (g - h).max_abs();
  const double minus = (g + h).max_abs();
  return std::min(plus, minus) / std::max(1.0, g.max_abs());
}

bool is_identity(const GroupElement& g, const Tolerances& tol) {
  return psl_distance(g.matrix(), Mat2::identity()) <= tol.cls;
}

IsometryClass classify(const GroupElement& g, const Tolerances& tol) {
  if (is_identity(g, tol)) return IsometryClass::Identity;
  const Complex t = g.trace();
  const Complex disc = t * t - 4.0;
  if (std::abs(disc) <= tol.cls) return IsometryClass::Parabolic;
  if (std::abs(t.imag()) <= tol.cls * std::max(1.0, std::abs(t)) && t.real() * t.real() < 4.0) {
    return IsometryClass::Elliptic;
  }
  return IsometryClass::Loxodromic;
}

FixedPoints fixed_points(const GroupElement& g, const Tolerances& tol) {
  const IsometryClass cls = classify(g, tol);
  if (cls == IsometryClass::Identity) {
    throw Error(ErrorCode::IdentityElement, "identity fixes every point");
  }
  const Mat2& m = g.matrix();
  // Treat c as zero when it is negligible next to the other entries.
  const double c_floor = 1e-15 * m.max_abs();
  const bool c_zero = std::abs(m.c) <= c_floor;

  if (cls == IsometryClass::Parabolic) {
    // (c, (a − d)/2, −b) is proportional to (1, x, x²); divide by the larger end.
    const Complex half = 0.5 * (m.a - m.d);
    BoundaryPoint p = BoundaryPoint::infinity();
    if (std::abs(m.c) >= std::abs(m.b)) {
      p = BoundaryPoint(half / m.c);
    } else if (std::abs(half) > c_floor) {
      p = BoundaryPoint(-m.b / half);
    }
    return {p, p, true};
  }

  const Complex t = m.trace();
  const Complex root = std::sqrt(t * t - 4.0);
  if (c_zero) {
    // z ↦ (a z + b)/d: fixed points ∞ and b/(d − a).
    return {BoundaryPoint(m.b / (m.d - m.a)), BoundaryPoint::infinity(), false};
  }
  // Stable roots of c z² + (d − a) z − b = 0.
  const Complex lin = m.d - m.a;
  const Complex s = (std::real(std::conj(lin) * root) >= 0.0) ? root : -root;
  const Complex q = -0.5 * (lin + s);
  const BoundaryPoint z1(q / m.c);
  const BoundaryPoint z2 = (q == Complex{}) ? BoundaryPoint(-m.b / (m.c * z1.value()))
                                            : BoundaryPoint(-m.b / q);
  return {z1, z2, false};
}

std::optional<EllipticInfo> elliptic_info(const GroupElement& g, const Tolerances& tol,
                                          int max_order) {
  if (classify(g, tol) != IsometryClass::Elliptic) return std::nullopt;
  const double half = std::clamp(std::abs(g.trace().real()) / 2.0, 0.0, 1.0);
  EllipticInfo info;
  info.rotation_angle = 2.0 * std::acos(half);
  const double turns = info.rotation_angle / (2.0 * std::numbers::pi);
  for (int n = 2; n <= max_order; ++n) {
    const double k = std::round(turns * n);
    if (k >= 1.0 && std::abs(turns * n - k) <= 1e3 * tol.cls * n) {
      info.order = n;
      info.geometrically_primitive = (k == 1.0);
      break;
    }
  }
  return info;
}

}  // namespace coreline
