#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "coreline/farey.hpp"
#include "coreline/geodesic.hpp"
#include "coreline/word.hpp"

namespace coreline {

/// A representation ρ(a) = A, ρ(b) = B of the free group on two generators
/// together with its core geodesic: the common perpendicular of the axes of
/// A and B.
///
/// The normalizer is a Möbius map sending the core to [0, ∞]. All positions
/// along the core are read in that frame. Its orientation and scale are fixed
/// by the group itself so that positions are invariant under conjugation:
///   * the crossing of Ax_A sits at height 1 (s = 0) when A is not parabolic,
///     otherwise the crossing of Ax_B, otherwise the crossing of N_AB;
///   * the crossing of Ax_B lies above that of Ax_A. A parabolic A is sent to
///     the lower end 0, a parabolic B to the upper end ∞. When neither rule
///     decides (crossings coincide) the lexicographically smaller core end is
///     sent to 0.
class Representation {
 public:
  /// Throws SingularMatrix, or ElementaryGroup when the axes share an end
  /// (including A = B or a trivial generator).
  static Representation build(const Mat2& a, const Mat2& b, const Tolerances& tol = {});

  const GroupElement& A() const { return a_; }
  const GroupElement& B() const { return b_; }
  const Geodesic& core() const { return core_; }
  const GroupElement& normalizer() const { return normalizer_; }
  const Tolerances& tolerances() const { return tol_; }

  GroupElement evaluate(const Word& w) const;
  /// Conjugate into the normalized frame: N g N⁻¹.
  GroupElement to_frame(const GroupElement& g) const;
  /// evaluate(w) in the normalized frame.
  GroupElement frame_matrix(const Word& w) const;

 private:
  Representation() = default;
  GroupElement a_;
  GroupElement b_;
  Geodesic core_ = Geodesic::point(BoundaryPoint::infinity());
  GroupElement normalizer_;
  Tolerances tol_;
};

enum class PiSource { Palindrome, PalindromePair, ParabolicEnd };
std::string_view to_string(PiSource source);

/// A point of the core geodesic: a signed hyperbolic position s in the
/// normalized frame, or one of its two ends (parabolic palindromes).
struct PiImage {
  double s = 0.0;  // ±∞ for ends
  PiSource source = PiSource::Palindrome;

  bool is_finite() const { return source != PiSource::ParabolicEnd; }
};

/// Π(w): the point where the axis of the palindrome w crosses the core.
/// Throws NotPalindrome, IdentityImage or OrthogonalityViolation.
PiImage pi_of_palindrome(const Representation& rep, const Word& w);

/// |x₁ + x₂| / max(1, |x₁|) for the normalized axis of evaluate(w).
double palindrome_axis_residual(const Representation& rep, const Word& w);

/// Line matrix T = UVVU − VUUV of the double altitude N_UV, normalized to
/// determinant 1, in the normalized frame. Throws CommutingPair when T vanishes to
/// working precision (‖T‖ ≤ ε_machine·(|u|+|v|)/εgeo relative to ‖UVVU‖).
GroupElement double_altitude_line(const Representation& rep, const Word& u, const Word& v);

/// N_UV as a geodesic in the normalized frame.
Geodesic double_altitude(const Representation& rep, const Word& u, const Word& v);

/// Π(U, V): the crossing of N_UV with the core.
PiImage pi_of_pair(const Representation& rep, const Word& u, const Word& v);

struct Palindromization {
  Word palindrome;  // reverse(w)·w
  PiImage image;
};

/// Throws TrivialPalindromization when reverse(w)·w is the identity word.
Palindromization palindromize(const Representation& rep, const Word& w);

/// Fixed points ±√(bd/ac) of reverse(W)·W from the entries of W = [[a,b],[c,d]]
/// in the normalized frame.
std::array<BoundaryPoint, 2> palindromization_fixed_points(const GroupElement& w_in_frame);

struct Hexagon {
  // Ax_A, L, Ax_B, L_B, Ax_AB, L_A (cyclic order, consecutive sides orthogonal)
  std::array<Geodesic, 6> sides;
  std::array<double, 6> orthogonality_residuals{};
  double factorization_residual_a = 0.0;  // psl distance A vs H_{L_A} H_L
  double factorization_residual_b = 0.0;  // psl distance B vs H_L H_{L_B}
};

/// Throws DegenerateAxis when A, B or AB is parabolic.
Hexagon hexagon(const Representation& rep);

struct PalindromicFactorization {
  Word first;   // (P₁P₂)^{n−1} P₁
  Word second;  // P₂
  bool power_is_palindrome = false;  // P₁P₂ palindromic and n odd
};

/// (P₁P₂)ⁿ = [(P₁P₂)^{n−1}P₁]·P₂. Throws NotPalindrome.
PalindromicFactorization elliptic_power_factorization(const Word& p1, const Word& p2, int n);

/// Π_Q(p/q): Π(e_{p/q}) for pq even, Π of the stored factor pair for pq odd.
PiImage rational_pi(const Representation& rep, const Rational& r);

}  // namespace coreline
