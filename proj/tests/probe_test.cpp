#include <gtest/gtest.h>

#include <sstream>

#include "coreline/json_io.hpp"
#include "coreline/probe.hpp"
#include "test_support.hpp"

namespace coreline {
namespace {

Representation parabolic_pair(double mu) { return Representation::build({1.0, 1.0, 0.0, 1.0}, {1.0, 0.0, mu, 1.0}); }

// Hyperbolic generators of trace 3 with axes [−1, 1] and [−6, 6]; their isometric
// circles cover [0.45, 2.24] and [2.68, 13.4] on each side, so they are disjoint.
Representation schottky_pair() {
  const double ch = 1.5;
  const double sh = std::sqrt(ch * ch - 1.0);
  return Representation::build({ch, sh, sh, ch}, {ch, 6.0 * sh, sh / 6.0, ch});
}

TEST(Jorgensen, Examples) {
  const JorgensenBaseline small = jorgensen_baseline(parabolic_pair(0.5));
  EXPECT_NEAR(small.value, 0.25, 1e-12);
  EXPECT_FALSE(small.pass);
  const JorgensenBaseline big = jorgensen_baseline(parabolic_pair(4.0));
  EXPECT_NEAR(big.value, 16.0, 1e-12);
  EXPECT_TRUE(big.pass);
}

TEST(Spectrum, DepthZeroIsTheGenerators) {
  const Representation rep = testing::standard_rep();
  const std::vector<SpectrumEntry> s = pi_spectrum(rep, 0);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].slope, Rational::make(1, 0));
  EXPECT_EQ(s[1].slope, Rational::make(0, 1));
  ASSERT_TRUE(s[0].image && s[1].image);
  EXPECT_NEAR(s[0].image->s, std::log(2.0), 1e-12);
  EXPECT_NEAR(s[1].image->s, 0.0, 1e-12);
  EXPECT_THROW((void)pi_spectrum(rep, -1), std::invalid_argument);
}

TEST(Spectrum, SchottkyIsFiniteAndStable) {
  const std::vector<SpectrumEntry> s6 = pi_spectrum(schottky_pair(), 6);
  const std::vector<SpectrumEntry> s5 = pi_spectrum(schottky_pair(), 5);
  const auto width = [](const std::vector<SpectrumEntry>& s) {
    double lo = 1e300, hi = -1e300;
    for (const SpectrumEntry& e : s) {
      EXPECT_TRUE(e.image && e.image->is_finite()) << e.slope.to_string();
      if (!e.image) continue;
      lo = std::min(lo, e.image->s);
      hi = std::max(hi, e.image->s);
    }
    return hi - lo;
  };
  EXPECT_NEAR(width(s6), width(s5), 0.01);
}

TEST(Spectrum, CsvFormat) {
  std::ostringstream out;
  write_spectrum_csv(out, pi_spectrum(testing::standard_rep(), 0));
  EXPECT_EQ(out.str(), "p,q,s,class,source\n1,0,0.69314718055994529,loxodromic,palindrome\n0,1,0,loxodromic,palindrome\n");
}

TEST(Probe, RejectsZeroDepth) {
  EXPECT_THROW((void)probe(testing::standard_rep(), {.depth = 0}), std::invalid_argument);
}

TEST(Probe, SchottkyPairIsBounded) {
  const ProbeReport r = probe(schottky_pair(), {.depth = 8, .random_samples = 200, .seed = 1});
  EXPECT_EQ(r.verdict, Verdict::BoundedConsistentWithGF);
  EXPECT_TRUE(r.witnesses.empty());
  ASSERT_TRUE(r.interval.has_value());
  EXPECT_LT(r.widths[8] - r.widths[6], 0.01);
  EXPECT_EQ(r.growth.size(), 9u);
  EXPECT_EQ(exit_code(r.verdict), 0);
}

TEST(Probe, LargeParabolicPairHasParabolicEnds) {
  const ProbeReport r = probe(parabolic_pair(4.0), {.depth = 6, .random_samples = 100, .seed = 2});
  EXPECT_EQ(r.verdict, Verdict::ParabolicEndsDetected);
  EXPECT_TRUE(r.lower_end_parabolic);
  EXPECT_TRUE(r.upper_end_parabolic);
  ASSERT_TRUE(r.interval.has_value());
  EXPECT_TRUE(std::isfinite(r.interval->first) && std::isfinite(r.interval->second));
}

TEST(Probe, GrowthAndWidthAreMonotone) {
  const ProbeReport r = probe(parabolic_pair(0.5), {.depth = 8, .random_samples = 200, .seed = 3});
  EXPECT_GT(r.growth[8], r.growth[4]);
  EXPECT_GT(r.growth[4], r.growth[1]);
  for (std::size_t d = 1; d < r.growth.size(); ++d) {
    EXPECT_GE(r.growth[d], r.growth[d - 1]);
    EXPECT_GE(r.widths[d], r.widths[d - 1]);
  }
}

TEST(Probe, ReportsAreDeterministic) {
  std::mt19937_64 rng(149);
  const Representation rep = testing::random_representation(rng);
  const ProbeConfig cfg{.depth = 5, .random_samples = 50, .seed = 42};
  EXPECT_EQ(json(probe(rep, cfg)).dump(), json(probe(rep, cfg)).dump());
  ProbeConfig other = cfg;
  other.seed = 43;
  EXPECT_NE(json(probe(rep, cfg)).dump(), json(probe(rep, other)).dump());
}

TEST(Probe, WitnessesArePalindromesThatRecompute) {
  // A low escape threshold forces witnesses on an ordinary representation.
  std::mt19937_64 rng(151);
  for (int i = 0; i < 5; ++i) {
    const Representation rep = testing::random_representation(rng);
    const ProbeReport r = probe(rep, {.depth = 4, .random_samples = 50, .seed = 7, .s_escape = 0.5});
    if (r.verdict == Verdict::UnboundedEvidenceNondiscrete) {
      EXPECT_FALSE(r.witnesses.empty());
    }
    for (const Witness& w : r.witnesses) {
      EXPECT_TRUE(w.word.is_palindrome()) << w.word.to_string();
      EXPECT_NEAR(pi_of_palindrome(rep, w.word).s, w.s, 1e-6);
      EXPECT_GT(std::abs(w.s), 0.5);
    }
  }
}

TEST(Probe, UnboundedIsNeverDowngradedByDepth) {
  std::mt19937_64 rng(157);
  for (int i = 0; i < 4; ++i) {
    const Representation rep = testing::random_representation(rng);
    bool unbounded = false;
    for (int depth = 1; depth <= 6; ++depth) {
      const ProbeReport r = probe(rep, {.depth = depth, .random_samples = 40, .seed = 11, .s_escape = 1.0});
      if (unbounded) {
        EXPECT_NE(r.verdict, Verdict::BoundedConsistentWithGF) << depth;
      }
      unbounded = unbounded || r.verdict == Verdict::UnboundedEvidenceNondiscrete;
    }
  }
}

TEST(Probe, SchottkyPairsAreNeverUnbounded) {
  for (double radius : {6.0, 10.0, 20.0}) {
    const double ch = 1.5;
    const double sh = std::sqrt(ch * ch - 1.0);
    const Representation rep = Representation::build({ch, sh, sh, ch}, {ch, radius * sh, sh / radius, ch});
    ASSERT_TRUE(jorgensen_baseline(rep).pass);
    for (int depth : {4, 10}) {
      const ProbeReport r = probe(rep, {.depth = depth, .random_samples = 100, .seed = 5});
      EXPECT_NE(r.verdict, Verdict::UnboundedEvidenceNondiscrete) << radius << " " << depth;
    }
  }
}

TEST(WitnessSearch, SchottkyHasNoneWithinBounds) {
  EXPECT_FALSE(witness_search(schottky_pair(), 8, 2).has_value());
}

TEST(WitnessSearch, TinySearchIsReproducible) {
  const Representation rep = parabolic_pair(0.5);
  const auto x = witness_search(rep, 1, 1, 0.1);
  const auto y = witness_search(rep, 1, 1, 0.1);
  ASSERT_EQ(x.has_value(), y.has_value());
  if (x) {
    EXPECT_EQ(x->palindrome, y->palindrome);
    EXPECT_TRUE(x->palindrome.is_palindrome());
    EXPECT_EQ(x->image.s, y->image.s);
  }
  EXPECT_FALSE(witness_search(rep, 0, 1).has_value());
}

TEST(ReducedWords, ShortlexOrder) {
  const std::vector<Word> w = reduced_words_up_to(2);
  ASSERT_EQ(w.size(), 4u + 12u);
  EXPECT_EQ(w[0].to_string(), "a");
  EXPECT_EQ(w[1].to_string(), "A");
  EXPECT_EQ(w[2].to_string(), "b");
  EXPECT_EQ(w[3].to_string(), "B");
  EXPECT_EQ(w[4].to_string(), "aa");
  EXPECT_EQ(w[5].to_string(), "ab");
}

TEST(Verdicts, ExitCodes) {
  EXPECT_EQ(exit_code(Verdict::BoundedConsistentWithGF), 0);
  EXPECT_EQ(exit_code(Verdict::ParabolicEndsDetected), 0);
  EXPECT_EQ(exit_code(Verdict::UnboundedEvidenceNondiscrete), 2);
  EXPECT_EQ(exit_code(Verdict::Inconclusive), 3);
}

}  // namespace
}  // namespace coreline
