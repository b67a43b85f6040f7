#pragma once

// JSON encodings shared by the CLI and by anything that stores results.
//   complex        [re, im]  (a bare number is read as real)
//   boundary point [re, im] | "inf"
//   matrix         {"a": c, "b": c, "c": c, "d": c}  (rows [[a, b], [c, d]] also read)
//   geodesic       {"e1": point, "e2": point}
//   generators     {"A": matrix, "B": matrix}
//   positions s    number | "inf" | "-inf"

#include <nlohmann/json.hpp>

#include "coreline/probe.hpp"

namespace coreline {

using json = nlohmann::json;

void to_json(json& j, const BoundaryPoint& p);
void from_json(const json& j, BoundaryPoint& p);

void to_json(json& j, const Mat2& m);
void from_json(const json& j, Mat2& m);

void to_json(json& j, const Geodesic& g);
void from_json(const json& j, Geodesic& g);

void to_json(json& j, const PiImage& img);
void from_json(const json& j, PiImage& img);

void to_json(json& j, const SpectrumEntry& e);
void from_json(const json& j, SpectrumEntry& e);

void to_json(json& j, const SampleEntry& e);
void from_json(const json& j, SampleEntry& e);

void to_json(json& j, const ProbeReport& r);
void from_json(const json& j, ProbeReport& r);

void to_json(json& j, const Hexagon& h);

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

/// Encode a signed position: finite numbers as-is, ±∞ as "inf" / "-inf".
json position_to_json(double s);
double position_from_json(const json& j);

/// Generator pair {"A": matrix, "B": matrix}. Throws ParseError.
std::pair<Mat2, Mat2> generators_from_json(const json& j);
json generators_to_json(const Mat2& a, const Mat2& b);

/// Classification record: {"trace": c, "class": name, "fixed": [points]}.
json classification_record(const GroupElement& g, const Tolerances& tol = {});

/// Word record: {"p", "q", "word", "palindrome", "factors"?}.
json primitive_record(const PrimitiveWord& pw);

}  // namespace coreline
