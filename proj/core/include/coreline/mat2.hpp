#pragma once

#include <complex>
#include <optional>
#include <string_view>

#include "coreline/error.hpp"
#include "coreline/tolerance.hpp"

namespace coreline {

using Complex = std::complex<double>;

/// A point of the Riemann sphere C ∪ {∞}, stored in a single chart with an
/// explicit infinity flag.
class BoundaryPoint {
 public:
  constexpr BoundaryPoint() = default;
  constexpr BoundaryPoint(Complex z) : z_(z) {}  // NOLINT(google-explicit-constructor)
  constexpr BoundaryPoint(double x) : z_(x, 0.0) {}  // NOLINT(google-explicit-constructor)

  static constexpr BoundaryPoint infinity() {
    BoundaryPoint p;
    p.infinite_ = true;
    return p;
  }

  constexpr bool is_infinite() const { return infinite_; }
  /// Finite value; meaningless for the point at infinity.
  constexpr Complex value() const { return z_; }

  bool operator==(const BoundaryPoint& other) const = default;

 private:
  Complex z_{0.0, 0.0};
  bool infinite_ = false;
};

/// Chordal distance on the unit sphere, in [0, 2]. Handles ∞.
double chordal_distance(const BoundaryPoint& p, const BoundaryPoint& q);

/// Lexicographic order by (Re, Im) with ∞ greatest.
bool lex_less(const BoundaryPoint& p, const BoundaryPoint& q);

/// Raw complex 2×2 matrix [[a, b], [c, d]] with no determinant constraint.
struct Mat2 {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static constexpr Mat2 identity() { return {}; }

  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }
  /// Largest entry modulus.
  double max_abs() const;

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  Mat2 operator*(Complex s) const { return {a * s, b * s, c * s, d * s}; }
  Mat2 operator/(Complex s) const { return {a / s, b / s, c / s, d / s}; }

  /// Adjugate [[d, -b], [-c, a]]; the inverse when det = 1.
  Mat2 adjugate() const { return {d, -b, -c, a}; }

  bool is_finite() const;
};

enum class IsometryClass { Identity, Parabolic, Elliptic, Loxodromic };

std::string_view to_string(IsometryClass cls);

/// An element of SL(2,C) read as an element of PSL(2,C): a unimodular matrix
/// whose comparisons are taken up to a global sign.
class GroupElement {
 public:
  GroupElement() = default;

  /// Divide by the principal square root of the determinant.
  /// Throws SingularMatrix when |det| is negligible relative to the entries.
  static GroupElement normalize(const Mat2& m, const Tolerances& tol = {});

  /// Wrap a matrix already known to be unimodular (products of group
  /// elements). No check is performed.
  static GroupElement from_unimodular(const Mat2& m) { return GroupElement(m); }

  const Mat2& matrix() const { return m_; }
  Complex a() const { return m_.a; }
  Complex b() const { return m_.b; }
  Complex c() const { return m_.c; }
  Complex d() const { return m_.d; }
  Complex trace() const { return m_.trace(); }

  GroupElement inverse() const { return GroupElement(m_.adjugate()); }
  GroupElement operator*(const GroupElement& o) const { return GroupElement(m_ * o.m_); }
  GroupElement operator-() const { return GroupElement(-m_); }

  /// Möbius action z ↦ (az + b)/(cz + d).
  BoundaryPoint apply(const BoundaryPoint& z) const;

 private:
  explicit GroupElement(const Mat2& m) : m_(m) {}
  Mat2 m_{};
};

GroupElement power(const GroupElement& g, int n);

/// min(‖g − h‖, ‖g + h‖) / max(1, ‖g‖) with the max-entry norm.
double psl_distance(const Mat2& g, const Mat2& h);

inline bool psl_equal(const GroupElement& g, const GroupElement& h, double eps) {
  return psl_distance(g.matrix(), h.matrix()) <= eps;
}

/// Trace classification. |t² − 4| ≤ tol.cls reports parabolic (or identity
/// when the matrix is ±I); a real trace with t² < 4 is elliptic.
IsometryClass classify(const GroupElement& g, const Tolerances& tol = {});

bool is_identity(const GroupElement& g, const Tolerances& tol = {});

/// Fixed points of the Möbius action, roots of c z² + (d − a) z − b = 0.
struct FixedPoints {
  BoundaryPoint first;
  BoundaryPoint second;
  bool parabolic = false;  // single fixed point; second == first
};

/// Throws IdentityElement for ±I.
FixedPoints fixed_points(const GroupElement& g, const Tolerances& tol = {});

/// Rotation data of an elliptic element: angle in (0, π] and, when the angle
/// is a rational multiple 2πk/n with n ≤ max_order, its order n and whether it
/// rotates through the minimal angle 2π/n.
struct EllipticInfo {
  double rotation_angle = 0.0;
  int order = 0;  // 0 when no finite order was detected
  bool geometrically_primitive = false;
};

std::optional<EllipticInfo> elliptic_info(const GroupElement& g, const Tolerances& tol = {},
                                          int max_order = 64);

}  // namespace coreline
