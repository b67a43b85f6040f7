#pragma once

#include "coreline/mat2.hpp"

namespace coreline {

/// A geodesic of upper half-space given by its unordered pair of ends.
/// Ends are stored in lexicographic order (∞ last). A degenerate geodesic
/// [p, p] marks the fixed point of a parabolic.
class Geodesic {
 public:
  /// Proper geodesic; throws DegenerateGeodesic when the ends coincide
  /// (chordal distance ≤ tol.geo).
  static Geodesic between(const BoundaryPoint& p, const BoundaryPoint& q, const Tolerances& tol = {});
  /// The degenerate line [p, p].
  static Geodesic point(const BoundaryPoint& p);

  const BoundaryPoint& e1() const { return e1_; }
  const BoundaryPoint& e2() const { return e2_; }
  bool is_degenerate() const { return degenerate_; }

  bool operator==(const Geodesic&) const = default;

 private:
  Geodesic(const BoundaryPoint& p, const BoundaryPoint& q, bool degenerate);
  BoundaryPoint e1_;
  BoundaryPoint e2_;
  bool degenerate_ = false;
};

/// Axis of a non-identity element; degenerate for parabolics.
Geodesic axis(const GroupElement& g, const Tolerances& tol = {});

/// Image of a geodesic under a Möbius map.
Geodesic transform(const GroupElement& m, const Geodesic& g, const Tolerances& tol = {});

/// Largest chordal distance between matched ends, minimised over both matchings.
double endpoint_distance(const Geodesic& g, const Geodesic& h);

/// Trace-zero unimodular matrix of the half-turn about g.
GroupElement line_matrix(const Geodesic& g);

/// H g H⁻¹ for the half-turn H about the axis.
GroupElement half_turn_conjugate(const Geodesic& axis, const GroupElement& g);

/// |tr(L₁ L₂)| for the line matrices; zero exactly when g1 ⟂ g2.
double orthogonality_residual(const Geodesic& g1, const Geodesic& g2);

bool are_orthogonal(const Geodesic& g1, const Geodesic& g2, const Tolerances& tol = {});

/// The unique geodesic orthogonal to both inputs. Degenerate inputs are
/// accepted. Throws SharedEndpoint when the inputs share an end.
Geodesic common_perpendicular(const Geodesic& g1, const Geodesic& g2, const Tolerances& tol = {});

/// Signed position ln|x| along [0, ∞] of a geodesic with ends ±x.
/// Throws NotOrthogonal unless |x₁ + x₂| / max(1, |x₁|) ≤ tol.geo.
double position_on_vertical_axis(const Geodesic& g, const Tolerances& tol = {});

/// |x₁ + x₂| / max(1, |x₁|); infinite when an end is ∞.
double antipodality_residual(const BoundaryPoint& x1, const BoundaryPoint& x2);

}  // namespace coreline
