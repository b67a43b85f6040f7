#include "coreline/json_io.hpp"

#include <cmath>
#include <limits>

namespace coreline {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

IsometryClass class_from_string(const std::string& s) {
  if (s == "identity") return IsometryClass::Identity;
  if (s == "parabolic") return IsometryClass::Parabolic;
  if (s == "elliptic") return IsometryClass::Elliptic;
  if (s == "loxodromic") return IsometryClass::Loxodromic;
  throw Error(ErrorCode::ParseError, "unknown isometry class '" + s + "'");
}

PiSource source_from_string(const std::string& s) {
  if (s == "palindrome") return PiSource::Palindrome;
  if (s == "pair") return PiSource::PalindromePair;
  if (s == "parabolic-end") return PiSource::ParabolicEnd;
  throw Error(ErrorCode::ParseError, "unknown source '" + s + "'");
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::BoundedConsistentWithGF, Verdict::UnboundedEvidenceNondiscrete,
                    Verdict::ParabolicEndsDetected, Verdict::Inconclusive}) {
    if (to_string(v) == s) return v;
  }
  throw Error(ErrorCode::ParseError, "unknown verdict '" + s + "'");
}

ErrorCode error_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(ErrorCode::ParseError); ++i) {
    const auto code = static_cast<ErrorCode>(i);
    if (to_string(code) == s) return code;
  }
  throw Error(ErrorCode::ParseError, "unknown error code '" + s + "'");
}

json optional_error(const std::optional<ErrorCode>& e) {
  return e ? json(std::string(to_string(*e))) : json(nullptr);
}

std::optional<ErrorCode> optional_error_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return error_from_string(j.get<std::string>());
}

json optional_image(const std::optional<PiImage>& img) { return img ? json(*img) : json(nullptr); }

std::optional<PiImage> optional_image_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<PiImage>();
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::ParseError, "complex numbers are [re, im] pairs, got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json position_to_json(double s) {
  if (std::isinf(s)) return s < 0 ? "-inf" : "inf";
  return s;
}

double position_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw Error(ErrorCode::ParseError, "bad position '" + s + "'");
  }
  return j.get<double>();
}

void to_json(json& j, const BoundaryPoint& p) {
  j = p.is_infinite() ? json("inf") : complex_to_json(p.value());
}

void from_json(const json& j, BoundaryPoint& p) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw Error(ErrorCode::ParseError, "the only symbolic point is \"inf\"");
    p = BoundaryPoint::infinity();
    return;
  }
  p = BoundaryPoint(complex_from_json(j));
}

void to_json(json& j, const Mat2& m) {
  j = json{{"a", complex_to_json(m.a)}, {"b", complex_to_json(m.b)},
           {"c", complex_to_json(m.c)}, {"d", complex_to_json(m.d)}};
}

void from_json(const json& j, Mat2& m) {
  if (j.is_array()) {
    if (j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2) {
      throw Error(ErrorCode::ParseError, "matrix rows must be [[a, b], [c, d]], got " + j.dump());
    }
    m = {complex_from_json(j[0][0]), complex_from_json(j[0][1]), complex_from_json(j[1][0]), complex_from_json(j[1][1])};
    return;
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "matrix must be [[a, b], [c, d]] or an object with keys a, b, c, d");
  for (const char* key : {"a", "b", "c", "d"}) {
    if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("matrix is missing entry '") + key + "'");
  }
  m = {complex_from_json(j["a"]), complex_from_json(j["b"]), complex_from_json(j["c"]), complex_from_json(j["d"])};
}

void to_json(json& j, const Geodesic& g) { j = json{{"e1", g.e1()}, {"e2", g.e2()}}; }

void from_json(const json& j, Geodesic& g) {
  const auto e1 = j.at("e1").get<BoundaryPoint>();
  const auto e2 = j.at("e2").get<BoundaryPoint>();
  g = (e1 == e2) ? Geodesic::point(e1) : Geodesic::between(e1, e2, Tolerances{0.0, 0.0, 0.0});
}

void to_json(json& j, const PiImage& img) {
  j = json{{"s", position_to_json(img.s)}, {"source", std::string(to_string(img.source))}};
}

void from_json(const json& j, PiImage& img) {
  img.s = position_from_json(j.at("s"));
  img.source = source_from_string(j.at("source").get<std::string>());
}

void to_json(json& j, const SpectrumEntry& e) {
  j = json{{"p", e.slope.p},
           {"q", e.slope.q},
           {"level", e.level},
           {"word", e.word.to_string()},
           {"from_pair", e.from_pair},
           {"class", std::string(to_string(e.cls))},
           {"image", optional_image(e.image)},
           {"error", optional_error(e.error)}};
  if (e.elliptic) {
    j["elliptic"] = json{{"rotation_angle", e.elliptic->rotation_angle},
                         {"order", e.elliptic->order},
                         {"geometrically_primitive", e.elliptic->geometrically_primitive}};
  } else {
    j["elliptic"] = nullptr;
  }
}

void from_json(const json& j, SpectrumEntry& e) {
  e.slope = Rational::make(j.at("p").get<long>(), j.at("q").get<long>());
  e.level = j.at("level").get<int>();
  e.word = Word::parse(j.at("word").get<std::string>());
  e.from_pair = j.at("from_pair").get<bool>();
  e.cls = class_from_string(j.at("class").get<std::string>());
  e.image = optional_image_from(j.at("image"));
  e.error = optional_error_from(j.at("error"));
  if (j.at("elliptic").is_null()) {
    e.elliptic.reset();
  } else {
    const json& el = j["elliptic"];
    e.elliptic = EllipticInfo{el.at("rotation_angle").get<double>(), el.at("order").get<int>(),
                              el.at("geometrically_primitive").get<bool>()};
  }
}

void to_json(json& j, const SampleEntry& e) {
  j = json{{"word", e.word.to_string()},
           {"palindrome", e.palindrome.to_string()},
           {"image", optional_image(e.image)},
           {"error", optional_error(e.error)}};
}

void from_json(const json& j, SampleEntry& e) {
  e.word = Word::parse(j.at("word").get<std::string>());
  e.palindrome = Word::parse(j.at("palindrome").get<std::string>());
  e.image = optional_image_from(j.at("image"));
  e.error = optional_error_from(j.at("error"));
}

void to_json(json& j, const ProbeReport& r) {
  j = json::object();
  j["verdict"] = std::string(to_string(r.verdict));
  j["interval"] = r.interval ? json::array({r.interval->first, r.interval->second}) : json(nullptr);
  j["growth"] = r.growth;
  j["widths"] = r.widths;
  j["parabolic_ends"] = json{{"lower", r.lower_end_parabolic}, {"upper", r.upper_end_parabolic}};
  j["jorgensen"] = json{{"value", r.jorgensen.value}, {"pass", r.jorgensen.pass}};
  json witnesses = json::array();
  for (const Witness& w : r.witnesses) witnesses.push_back({{"word", w.word.to_string()}, {"s", position_to_json(w.s)}});
  j["witnesses"] = std::move(witnesses);
  if (r.conjugate_witness) {
    const ConjugateWitness& c = *r.conjugate_witness;
    j["conjugate_witness"] = json{{"C", c.conjugator.to_string()}, {"D", c.core.to_string()},
                                  {"n", c.power},           {"palindrome", c.palindrome.to_string()},
                                  {"image", c.image}};
  } else {
    j["conjugate_witness"] = nullptr;
  }
  j["spectrum"] = r.spectrum;
  j["random_palindrome_samples"] = r.random_palindrome_samples;
}

void from_json(const json& j, ProbeReport& r) {
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  if (j.at("interval").is_null()) {
    r.interval.reset();
  } else {
    r.interval = std::make_pair(j["interval"].at(0).get<double>(), j["interval"].at(1).get<double>());
  }
  r.growth = j.at("growth").get<std::vector<double>>();
  r.widths = j.at("widths").get<std::vector<double>>();
  r.lower_end_parabolic = j.at("parabolic_ends").at("lower").get<bool>();
  r.upper_end_parabolic = j.at("parabolic_ends").at("upper").get<bool>();
  r.jorgensen = {j.at("jorgensen").at("value").get<double>(), j.at("jorgensen").at("pass").get<bool>()};
  r.witnesses.clear();
  for (const json& w : j.at("witnesses")) {
    r.witnesses.push_back({Word::parse(w.at("word").get<std::string>()), position_from_json(w.at("s"))});
  }
  if (j.at("conjugate_witness").is_null()) {
    r.conjugate_witness.reset();
  } else {
    const json& c = j["conjugate_witness"];
    r.conjugate_witness = ConjugateWitness{Word::parse(c.at("C").get<std::string>()),
                                           Word::parse(c.at("D").get<std::string>()), c.at("n").get<int>(),
                                           Word::parse(c.at("palindrome").get<std::string>()),
                                           c.at("image").get<PiImage>()};
  }
  r.spectrum = j.at("spectrum").get<std::vector<SpectrumEntry>>();
  r.random_palindrome_samples = j.at("random_palindrome_samples").get<std::vector<SampleEntry>>();
}

void to_json(json& j, const Hexagon& h) {
  static constexpr const char* kNames[] = {"axis_A", "core", "axis_B", "line_B", "axis_AB", "line_A"};
  json sides = json::array();
  for (std::size_t i = 0; i < h.sides.size(); ++i) {
    json side = h.sides[i];
    side["name"] = kNames[i];
    sides.push_back(std::move(side));
  }
  j = json{{"sides", std::move(sides)},
           {"orthogonality_residuals", h.orthogonality_residuals},
           {"factorization_residual_A", h.factorization_residual_a},
           {"factorization_residual_B", h.factorization_residual_b}};
}

std::pair<Mat2, Mat2> generators_from_json(const json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B")) {
    throw Error(ErrorCode::ParseError, "generator file must contain matrices \"A\" and \"B\"");
  }
  return {j["A"].get<Mat2>(), j["B"].get<Mat2>()};
}

json generators_to_json(const Mat2& a, const Mat2& b) { return json{{"A", a}, {"B", b}}; }

json classification_record(const GroupElement& g, const Tolerances& tol) {
  const IsometryClass cls = classify(g, tol);
  json rec{{"trace", complex_to_json(g.trace())}, {"class", std::string(to_string(cls))}};
  json fixed = json::array();
  if (cls != IsometryClass::Identity) {
    const FixedPoints fp = fixed_points(g, tol);
    fixed.push_back(fp.first);
    if (!fp.parabolic) fixed.push_back(fp.second);
  }
  rec["fixed"] = std::move(fixed);
  if (const auto info = elliptic_info(g, tol)) {
    rec["rotation_angle"] = info->rotation_angle;
    rec["order"] = info->order;
    rec["geometrically_primitive"] = info->geometrically_primitive;
  }
  return rec;
}

json primitive_record(const PrimitiveWord& pw) {
  json rec{{"p", pw.slope.p},
           {"q", pw.slope.q},
           {"word", pw.word.to_string()},
           {"palindrome", pw.word.is_palindrome()}};
  if (pw.factors) rec["factors"] = json::array({pw.factors->first.to_string(), pw.factors->second.to_string()});
  return rec;
}

}  // namespace coreline
