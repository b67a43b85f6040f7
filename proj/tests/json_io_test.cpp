#include <gtest/gtest.h>

#include "coreline/json_io.hpp"
#include "test_support.hpp"

namespace coreline {
namespace {

TEST(Json, BoundaryPoints) {
  EXPECT_EQ(json(BoundaryPoint::infinity()).dump(), "\"inf\"");
  EXPECT_EQ(json(BoundaryPoint(Complex(1.5, -2.0))).dump(), "[1.5,-2.0]");
  EXPECT_EQ(json::parse("\"inf\"").get<BoundaryPoint>(), BoundaryPoint::infinity());
  EXPECT_EQ(json::parse("[3, 0]").get<BoundaryPoint>(), BoundaryPoint(3.0));
  EXPECT_EQ(json::parse("3").get<BoundaryPoint>(), BoundaryPoint(3.0));
  EXPECT_THROW((void)json::parse("\"oo\"").get<BoundaryPoint>(), Error);
}

TEST(Json, MatrixRoundTrip) {
  const Mat2 m{Complex(1, 2), Complex(-3, 0.5), Complex(0, 0), Complex(7, -1)};
  const Mat2 back = json::parse(json(m).dump()).get<Mat2>();
  EXPECT_EQ(back.a, m.a);
  EXPECT_EQ(back.b, m.b);
  EXPECT_EQ(back.c, m.c);
  EXPECT_EQ(back.d, m.d);
  EXPECT_THROW((void)json::parse(R"({"a":1,"b":0,"c":0})").get<Mat2>(), Error);
  const Mat2 rows = json::parse("[[1, [0, 2]], [0.5, 1]]").get<Mat2>();
  EXPECT_EQ(rows.b, Complex(0.0, 2.0));
  EXPECT_EQ(rows.c, Complex(0.5));
  EXPECT_THROW((void)json::parse("[[1, 2, 3], [0, 1]]").get<Mat2>(), Error);
}

TEST(Json, GeneratorFile) {
  const auto [a, b] = generators_from_json(json::parse(R"({"A":{"a":1,"b":1,"c":0,"d":1},"B":{"a":[1,0],"b":0,"c":[0.5,0],"d":1}})"));
  EXPECT_EQ(a.b, Complex(1.0));
  EXPECT_EQ(b.c, Complex(0.5));
  const auto [a2, b2] = generators_from_json(generators_to_json(a, b));
  EXPECT_EQ(a2.b, a.b);
  EXPECT_EQ(b2.c, b.c);
  EXPECT_THROW((void)generators_from_json(json::parse(R"({"A":{"a":1,"b":1,"c":0,"d":1}})")), Error);
}

TEST(Json, ClassificationRecords) {
  const json par = classification_record(GroupElement::normalize({1.0, 1.0, 0.0, 1.0}), {});
  EXPECT_EQ(par["class"], "parabolic");
  EXPECT_EQ(par["fixed"].dump(), "[\"inf\"]");
  const json lox = classification_record(GroupElement::normalize({2.0, 0.0, 0.0, 0.5}), {});
  EXPECT_EQ(lox["class"], "loxodromic");
  ASSERT_EQ(lox["fixed"].size(), 2u);
  std::vector<BoundaryPoint> fixed{lox["fixed"][0].get<BoundaryPoint>(), lox["fixed"][1].get<BoundaryPoint>()};
  EXPECT_NE(std::find(fixed.begin(), fixed.end(), BoundaryPoint(0.0)), fixed.end());
  EXPECT_NE(std::find(fixed.begin(), fixed.end(), BoundaryPoint::infinity()), fixed.end());
  const json ell = classification_record(GroupElement::normalize({0.0, 1.0, -1.0, 0.0}), {});
  EXPECT_EQ(ell["class"], "elliptic");
  EXPECT_EQ(ell["order"], 2);
}

TEST(Json, PrimitiveRecords) {
  EXPECT_EQ(primitive_record(primitive_word(Rational::make(1, 2))).dump(),
            R"({"p":1,"palindrome":true,"q":2,"word":"aba"})");
  EXPECT_EQ(primitive_record(primitive_word(Rational::make(1, 1))).dump(),
            R"({"factors":["a","b"],"p":1,"palindrome":false,"q":1,"word":"ab"})");
}

TEST(Json, PiImagesWithInfinitePositions) {
  const PiImage end{-std::numeric_limits<double>::infinity(), PiSource::ParabolicEnd};
  EXPECT_EQ(json(end).dump(), R"({"s":"-inf","source":"parabolic-end"})");
  const PiImage back = json::parse(json(end).dump()).get<PiImage>();
  EXPECT_EQ(back.s, end.s);
  EXPECT_EQ(back.source, end.source);
}

TEST(Json, GeodesicRoundTrip) {
  const Geodesic g = Geodesic::between(Complex(1.0, 2.0), BoundaryPoint::infinity());
  Geodesic back = Geodesic::point(0.0);
  from_json(json::parse(json(g).dump()), back);
  EXPECT_EQ(back.e1(), g.e1());
  EXPECT_EQ(back.e2(), g.e2());
}

TEST(Json, ProbeReportRoundTrip) {
  for (double mu : {0.5, 4.0}) {
    const Representation rep = Representation::build({1.0, 1.0, 0.0, 1.0}, {1.0, 0.0, mu, 1.0});
    const ProbeReport report = probe(rep, {.depth = 4, .random_samples = 30, .seed = 9, .s_escape = 2.0});
    const json first = report;
    const ProbeReport back = json::parse(first.dump()).get<ProbeReport>();
    EXPECT_EQ(json(back), first);
  }
}

TEST(Json, HexagonNamesSides) {
  const json j = hexagon(testing::standard_rep());
  ASSERT_EQ(j["sides"].size(), 6u);
  EXPECT_EQ(j["sides"][0]["name"], "axis_A");
  EXPECT_EQ(j["sides"][1]["name"], "core");
  EXPECT_EQ(j["sides"][5]["name"], "line_A");
  EXPECT_EQ(j["orthogonality_residuals"].size(), 6u);
}

}  // namespace
}  // namespace coreline
