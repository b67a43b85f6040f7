#include "coreline/probe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

namespace coreline {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::BoundedConsistentWithGF: return "BOUNDED_CONSISTENT_WITH_GF";
    case Verdict::UnboundedEvidenceNondiscrete: return "UNBOUNDED_EVIDENCE_NONDISCRETE";
    case Verdict::ParabolicEndsDetected: return "PARABOLIC_ENDS_DETECTED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::BoundedConsistentWithGF:
    case Verdict::ParabolicEndsDetected: return 0;
    case Verdict::UnboundedEvidenceNondiscrete: return 2;
    case Verdict::Inconclusive: return 3;
  }
  return 3;
}

std::vector<SpectrumEntry> pi_spectrum(const Representation& rep, int depth) {
  if (depth < 0) throw std::invalid_argument("pi_spectrum: depth must be non-negative");
  std::vector<SpectrumEntry> out;
  for (const FareyNode& node : enumerate(depth)) {
    SpectrumEntry entry;
    entry.slope = node.slope;
    entry.level = node.level;
    entry.word = node.word;
    entry.from_pair = node.factors.has_value();
    try {
      const GroupElement e = rep.evaluate(node.word);
      entry.cls = classify(e, rep.tolerances());
      entry.elliptic = elliptic_info(e, rep.tolerances());
      entry.image = node.factors ? pi_of_pair(rep, node.factors->first, node.factors->second)
                                 : pi_of_palindrome(rep, node.word);
    } catch (const Error& err) {
      entry.error = err.code();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

std::string format_s(const PiImage& img) {
  if (std::isinf(img.s)) return img.s < 0 ? "-inf" : "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", img.s);
  return buf;
}

}  // namespace

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumEntry>& spectrum) {
  out << "p,q,s,class,source\n";
  for (const SpectrumEntry& e : spectrum) {
    out << e.slope.p << ',' << e.slope.q << ',';
    if (e.image) {
      out << format_s(*e.image) << ',' << to_string(e.cls) << ',' << to_string(e.image->source);
    } else {
      out << "nan," << to_string(e.cls) << ",error:" << to_string(e.error.value_or(ErrorCode::SchemeViolation));
    }
    out << '\n';
  }
}

std::vector<Word> reduced_words_up_to(int max_len) {
  static constexpr Letter kOrder[] = {1, -1, 2, -2};
  std::vector<Word> all;
  std::vector<std::vector<Letter>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& prefix : layer) {
      for (Letter l : kOrder) {
        if (!prefix.empty() && prefix.back() == -l) continue;
        auto w = prefix;
        w.push_back(l);
        all.push_back(Word::reduce(w));
        next.push_back(std::move(w));
      }
    }
    layer = std::move(next);
  }
  return all;
}

namespace {

Word random_word(std::mt19937_64& rng, int length) {
  static constexpr Letter kLetters[] = {1, -1, 2, -2};
  std::uniform_int_distribution<int> first(0, 3);
  std::uniform_int_distribution<int> rest(0, 2);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    if (letters.empty()) {
      letters.push_back(kLetters[first(rng)]);
      continue;
    }
    // Three letters remain once the inverse of the previous one is excluded.
    std::vector<Letter> allowed;
    for (Letter l : kLetters) {
      if (l != -letters.back()) allowed.push_back(l);
    }
    letters.push_back(allowed[static_cast<std::size_t>(rest(rng))]);
  }
  return Word::reduce(letters);
}

// Depth at which a sample of this length enters the growth sequence.
int sample_depth(const Word& w) { return static_cast<int>((w.length() + 1) / 2); }

}  // namespace

JorgensenBaseline jorgensen_baseline(const Representation& rep) {
  const GroupElement& a = rep.A();
  const GroupElement& b = rep.B();
  const Complex ta = a.trace();
  const Complex tc = (a * b * a.inverse() * b.inverse()).trace();
  JorgensenBaseline j;
  j.value = std::abs(ta * ta - 4.0) + std::abs(tc - 2.0);
  j.pass = j.value >= 1.0;
  return j;
}

std::optional<ConjugateWitness> witness_search(const Representation& rep, int max_conj_power,
                                               int max_word_len, double s_escape) {
  if (max_conj_power < 1 || max_word_len < 1) return std::nullopt;
  const std::vector<Word> words = reduced_words_up_to(max_word_len);
  for (const Word& c : words) {
    const Word c_inv = c.inverse();
    for (const Word& d : words) {
      for (int n = 1; n <= max_conj_power; ++n) {
        const Word u = c.power(n) * d * c_inv.power(n);
        if (u.empty()) continue;
        const Word v = u.reverse();
        for (const Word& p : {u * v, v * u}) {
          if (p.empty()) continue;
          try {
            const PiImage img = pi_of_palindrome(rep, p);
            if (img.is_finite() && std::abs(img.s) > s_escape) {
              return ConjugateWitness{c, d, n, p, img};
            }
          } catch (const Error&) {
            // identity images and numerical breakdowns are not witnesses
          }
        }
      }
    }
  }
  return std::nullopt;
}

ProbeReport probe(const Representation& rep, const ProbeConfig& config) {
  if (config.depth < 1) throw std::invalid_argument("probe: depth must be at least 1");
  const int depth = config.depth;
  ProbeReport report;
  report.spectrum = pi_spectrum(rep, depth);
  report.jorgensen = jorgensen_baseline(rep);

  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> length_dist(1, 2 * depth);
  for (int i = 0; i < config.random_samples; ++i) {
    SampleEntry sample;
    sample.word = random_word(rng, length_dist(rng));
    sample.palindrome = sample.word.reverse() * sample.word;
    try {
      sample.image = palindromize(rep, sample.word).image;
    } catch (const Error& err) {
      sample.error = err.code();
    }
    report.random_palindrome_samples.push_back(std::move(sample));
  }

  if (config.conj_max_word_len > 0 && config.conj_max_power > 0) {
    report.conjugate_witness =
        witness_search(rep, config.conj_max_power, config.conj_max_word_len, config.s_escape);
  }

  // Per-depth interval over finite values; growth is the running max |s|.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> lo(static_cast<std::size_t>(depth) + 1, kInf);
  std::vector<double> hi(static_cast<std::size_t>(depth) + 1, -kInf);
  bool breakdown = false;
  const auto record = [&](int at_depth, const std::optional<PiImage>& img,
                          const std::optional<ErrorCode>& err, const Word* palindrome) {
    if (err) {
      if (*err != ErrorCode::IdentityImage && *err != ErrorCode::TrivialPalindromization &&
          *err != ErrorCode::CommutingPair) {
        breakdown = true;
      }
      return;
    }
    if (!img) return;
    if (!img->is_finite()) {
      (img->s < 0 ? report.lower_end_parabolic : report.upper_end_parabolic) = true;
      return;
    }
    const auto d = static_cast<std::size_t>(std::min(at_depth, depth));
    lo[d] = std::min(lo[d], img->s);
    hi[d] = std::max(hi[d], img->s);
    // Pair images come from a line matrix, not a word; they bound the interval only.
    if (palindrome && std::abs(img->s) > config.s_escape) report.witnesses.push_back({*palindrome, img->s});
  };
  for (const SpectrumEntry& e : report.spectrum) {
    record(e.level, e.image, e.error, e.from_pair ? nullptr : &e.word);
  }
  for (const SampleEntry& s : report.random_palindrome_samples) {
    record(sample_depth(s.word), s.image, s.error, &s.palindrome);
  }
  if (report.conjugate_witness) {
    const ConjugateWitness& cw = *report.conjugate_witness;
    report.witnesses.push_back({cw.palindrome, cw.image.s});
  }

  double run_lo = kInf;
  double run_hi = -kInf;
  for (std::size_t d = 0; d <= static_cast<std::size_t>(depth); ++d) {
    run_lo = std::min(run_lo, lo[d]);
    run_hi = std::max(run_hi, hi[d]);
    const bool any = run_lo <= run_hi;
    report.growth.push_back(any ? std::max(std::abs(run_lo), std::abs(run_hi)) : 0.0);
    report.widths.push_back(any ? run_hi - run_lo : 0.0);
  }
  if (run_lo <= run_hi) report.interval = std::make_pair(run_lo, run_hi);

  const double increase = report.growth[static_cast<std::size_t>(depth)] -
                          report.growth[static_cast<std::size_t>(std::max(0, depth - 2))];
  if (!report.witnesses.empty()) {
    report.verdict = Verdict::UnboundedEvidenceNondiscrete;
  } else if ((report.lower_end_parabolic || report.upper_end_parabolic) && report.interval && !breakdown) {
    report.verdict = Verdict::ParabolicEndsDetected;
  } else if (report.interval && !breakdown && increase < config.plateau) {
    report.verdict = Verdict::BoundedConsistentWithGF;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

}  // namespace coreline
