#include "coreline/representation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace coreline {

std::string_view to_string(PiSource source) {
  switch (source) {
    case PiSource::Palindrome: return "palindrome";
    case PiSource::PalindromePair: return "pair";
    case PiSource::ParabolicEnd: return "parabolic-end";
  }
  return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Möbius map sending p ↦ 0 and q ↦ ∞ (p finite).
GroupElement send_to_zero_infinity(const BoundaryPoint& p, const BoundaryPoint& q, const Tolerances& tol) {
  const Complex u = p.value();
  if (q.is_infinite()) return GroupElement::from_unimodular({1.0, -u, 0.0, 1.0});
  return GroupElement::normalize({1.0, -u, 1.0, -q.value()}, tol);
}

// z ↦ 1/z, exchanging the ends of [0, ∞].
const GroupElement kFlip = GroupElement::from_unimodular({0.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 0.0});

// z ↦ e^{-s} z, shifting positions along [0, ∞] by −s.
GroupElement shift(double s) {
  return GroupElement::from_unimodular({std::exp(-s / 2.0), 0.0, 0.0, std::exp(s / 2.0)});
}

// Where an element's axis meets [0, ∞] in the current frame.
struct Crossing {
  bool parabolic = false;
  bool upper_end = false;  // parabolic fixed point at ∞ rather than 0
  double s = 0.0;
};

Crossing crossing_of(const GroupElement& g, const Tolerances& tol) {
  const FixedPoints fp = fixed_points(g, tol);
  Crossing c;
  if (fp.parabolic) {
    c.parabolic = true;
    c.upper_end = chordal_distance(fp.first, BoundaryPoint::infinity()) < chordal_distance(fp.first, 0.0);
    return c;
  }
  if (fp.first.is_infinite() || fp.second.is_infinite()) {
    throw Error(ErrorCode::OrthogonalityViolation, "axis ends at a core end");
  }
  c.s = 0.5 * (std::log(std::abs(fp.first.value())) + std::log(std::abs(fp.second.value())));
  return c;
}

Mat2 double_altitude_raw(const GroupElement& u, const GroupElement& v) {
  const Mat2 uv = (u * v).matrix();
  const Mat2 vu = (v * u).matrix();
  return uv * vu - vu * uv;
}

void require_palindrome(const Word& w) {
  if (!w.is_palindrome()) throw Error(ErrorCode::NotPalindrome, "'" + w.to_string() + "' is not a palindrome");
}

// Π from the fixed points of an element (or line matrix) in the normalized frame.
PiImage image_from_frame_element(const GroupElement& g, std::size_t length, PiSource source,
                                 const Tolerances& tol) {
  const double eps = tol.geo_for_length(length);
  const FixedPoints fp = fixed_points(g, tol);
  if (fp.parabolic) {
    if (chordal_distance(fp.first, 0.0) <= eps) return {-kInf, PiSource::ParabolicEnd};
    if (chordal_distance(fp.first, BoundaryPoint::infinity()) <= eps) return {kInf, PiSource::ParabolicEnd};
    throw Error(ErrorCode::OrthogonalityViolation, "parabolic fixed point is not an end of the core");
  }
  const double residual = antipodality_residual(fp.first, fp.second);
  if (!(residual <= eps)) {
    throw Error(ErrorCode::OrthogonalityViolation,
                "axis ends are not antipodal (residual " + std::to_string(residual) + ")");
  }
  const double r1 = std::abs(fp.first.value());
  const double r2 = std::abs(fp.second.value());
  return {0.5 * (std::log(r1) + std::log(r2)), source};
}

}  // namespace

Representation Representation::build(const Mat2& a_raw, const Mat2& b_raw, const Tolerances& tol) {
  Representation rep;
  rep.tol_ = tol;
  rep.a_ = GroupElement::normalize(a_raw, tol);
  rep.b_ = GroupElement::normalize(b_raw, tol);
  if (is_identity(rep.a_, tol) || is_identity(rep.b_, tol)) {
    throw Error(ErrorCode::ElementaryGroup, "a generator is the identity");
  }
  try {
    rep.core_ = common_perpendicular(axis(rep.a_, tol), axis(rep.b_, tol), tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SharedEndpoint || e.code() == ErrorCode::DegenerateGeodesic) {
      throw Error(ErrorCode::ElementaryGroup, "axes of the generators share an end");
    }
    throw;
  }

  GroupElement frame = send_to_zero_infinity(rep.core_.e1(), rep.core_.e2(), tol);
  const GroupElement fa = frame * rep.a_ * frame.inverse();
  const GroupElement fb = frame * rep.b_ * frame.inverse();
  Crossing ca = crossing_of(fa, tol);
  Crossing cb = crossing_of(fb, tol);

  bool flip = false;
  if (ca.parabolic) {
    flip = ca.upper_end;
  } else if (cb.parabolic) {
    flip = !cb.upper_end;
  } else {
    flip = cb.s < ca.s - tol.geo;
  }
  if (flip) {
    frame = kFlip * frame;
    ca.s = -ca.s;
    cb.s = -cb.s;
  }

  double anchor = 0.0;
  if (!ca.parabolic) {
    anchor = ca.s;
  } else if (!cb.parabolic) {
    anchor = cb.s;
  } else {
    const GroupElement ga = frame * rep.a_ * frame.inverse();
    const GroupElement gb = frame * rep.b_ * frame.inverse();
    const Mat2 t = double_altitude_raw(ga, gb);
    if (std::abs(t.det()) > tol.cls * t.max_abs() * t.max_abs()) {
      const GroupElement line = GroupElement::from_unimodular(t / std::sqrt(t.det()));
      const FixedPoints fp = fixed_points(line, tol);
      if (!fp.parabolic && !fp.first.is_infinite() && !fp.second.is_infinite()) {
        anchor = 0.5 * (std::log(std::abs(fp.first.value())) + std::log(std::abs(fp.second.value())));
      }
    }
  }
  rep.normalizer_ = shift(anchor) * frame;
  return rep;
}

GroupElement Representation::evaluate(const Word& w) const { return coreline::evaluate(w, a_, b_); }

GroupElement Representation::to_frame(const GroupElement& g) const {
  return normalizer_ * g * normalizer_.inverse();
}

GroupElement Representation::frame_matrix(const Word& w) const {
  return coreline::evaluate(w, to_frame(a_), to_frame(b_));
}

PiImage pi_of_palindrome(const Representation& rep, const Word& w) {
  require_palindrome(w);
  const Tolerances& tol = rep.tolerances();
  const GroupElement g = rep.frame_matrix(w);
  if (is_identity(g, tol)) throw Error(ErrorCode::IdentityImage, "'" + w.to_string() + "' evaluates to the identity");
  return image_from_frame_element(g, w.length(), PiSource::Palindrome, tol);
}

double palindrome_axis_residual(const Representation& rep, const Word& w) {
  const FixedPoints fp = fixed_points(rep.frame_matrix(w), rep.tolerances());
  if (fp.parabolic) {
    return std::min(chordal_distance(fp.first, 0.0), chordal_distance(fp.first, BoundaryPoint::infinity()));
  }
  return antipodality_residual(fp.first, fp.second);
}

GroupElement double_altitude_line(const Representation& rep, const Word& u, const Word& v) {
  const Tolerances& tol = rep.tolerances();
  const GroupElement gu = rep.frame_matrix(u);
  const GroupElement gv = rep.frame_matrix(v);
  const Mat2 t = double_altitude_raw(gu, gv);
  const double scale = ((gu * gv) * (gv * gu)).matrix().max_abs();
  // Below this relative size T cannot locate its axis to within εgeo in double precision.
  const double resolution =
      std::numeric_limits<double>::epsilon() * static_cast<double>(u.length() + v.length()) / tol.geo;
  if (t.max_abs() <= resolution * scale) {
    throw Error(ErrorCode::CommutingPair, "UV and VU commute to working precision");
  }
  if (std::abs(t.det()) <= tol.cls * t.max_abs() * t.max_abs()) {
    throw Error(ErrorCode::DegenerateAxis, "double altitude degenerates to a point");
  }
  return GroupElement::from_unimodular(t / std::sqrt(t.det()));
}

Geodesic double_altitude(const Representation& rep, const Word& u, const Word& v) {
  return axis(double_altitude_line(rep, u, v), rep.tolerances());
}

PiImage pi_of_pair(const Representation& rep, const Word& u, const Word& v) {
  require_palindrome(u);
  require_palindrome(v);
  const GroupElement line = double_altitude_line(rep, u, v);
  return image_from_frame_element(line, 2 * (u.length() + v.length()), PiSource::PalindromePair,
                                  rep.tolerances());
}

Palindromization palindromize(const Representation& rep, const Word& w) {
  const Word p = w.reverse() * w;
  if (p.empty()) throw Error(ErrorCode::TrivialPalindromization, "empty word");
  const GroupElement g = rep.frame_matrix(w);
  if (is_identity(g, rep.tolerances())) {
    throw Error(ErrorCode::TrivialPalindromization, "'" + w.to_string() + "' evaluates to the identity");
  }
  if (std::abs(g.trace()) <= rep.tolerances().cls) {
    throw Error(ErrorCode::TrivialPalindromization, "'" + w.to_string() + "' has order two");
  }
  return {p, pi_of_palindrome(rep, p)};
}

std::array<BoundaryPoint, 2> palindromization_fixed_points(const GroupElement& w) {
  const Complex num = w.b() * w.d();
  const Complex den = w.a() * w.c();
  if (den == Complex{}) return {BoundaryPoint::infinity(), BoundaryPoint::infinity()};
  const Complex x = std::sqrt(num / den);
  return {BoundaryPoint(x), BoundaryPoint(-x)};
}

Hexagon hexagon(const Representation& rep) {
  const Tolerances& tol = rep.tolerances();
  const GroupElement ab = rep.A() * rep.B();
  for (const GroupElement* g : {&rep.A(), &rep.B(), &ab}) {
    const IsometryClass cls = classify(*g, tol);
    if (cls == IsometryClass::Parabolic || cls == IsometryClass::Identity) {
      throw Error(ErrorCode::DegenerateAxis, "hexagon needs proper axes for A, B and AB");
    }
  }
  const Geodesic ax_a = axis(rep.A(), tol);
  const Geodesic ax_b = axis(rep.B(), tol);
  const Geodesic ax_ab = axis(ab, tol);
  Geodesic l_a = ax_a;
  Geodesic l_b = ax_b;
  try {
    l_a = common_perpendicular(ax_a, ax_ab, tol);
    l_b = common_perpendicular(ax_b, ax_ab, tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SharedEndpoint) throw Error(ErrorCode::ElementaryGroup, e.what());
    throw;
  }

  Hexagon hex{{ax_a, rep.core(), ax_b, l_b, ax_ab, l_a}};
  for (std::size_t i = 0; i < 6; ++i) {
    hex.orthogonality_residuals[i] = orthogonality_residual(hex.sides[i], hex.sides[(i + 1) % 6]);
  }
  const GroupElement h_l = line_matrix(rep.core());
  hex.factorization_residual_a = psl_distance(rep.A().matrix(), (line_matrix(l_a) * h_l).matrix());
  hex.factorization_residual_b = psl_distance(rep.B().matrix(), (h_l * line_matrix(l_b)).matrix());
  return hex;
}

PalindromicFactorization elliptic_power_factorization(const Word& p1, const Word& p2, int n) {
  require_palindrome(p1);
  require_palindrome(p2);
  if (n < 1) throw std::invalid_argument("elliptic_power_factorization: n must be positive");
  const Word e = p1 * p2;
  PalindromicFactorization f{e.power(n - 1) * p1, p2, e.is_palindrome() && n % 2 == 1};
  return f;
}

PiImage rational_pi(const Representation& rep, const Rational& r) {
  const PrimitiveWord pw = primitive_word(r);
  if (pw.factors) return pi_of_pair(rep, pw.factors->first, pw.factors->second);
  return pi_of_palindrome(rep, pw.word);
}

}  // namespace coreline
