#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coreline/representation.hpp"

namespace coreline {

/// One rational of the Π-spectrum. Failures are recorded, not thrown.
struct SpectrumEntry {
  Rational slope;
  int level = 0;
  Word word;  // e_{p/q}
  bool from_pair = false;  // Π of the palindromic factor pair (pq odd)
  IsometryClass cls = IsometryClass::Loxodromic;  // class of E_{p/q}
  std::optional<PiImage> image;
  std::optional<EllipticInfo> elliptic;
  std::optional<ErrorCode> error;
};

/// Π-image of every rational in the Farey tree to `depth`, sorted by (q, p).
std::vector<SpectrumEntry> pi_spectrum(const Representation& rep, int depth);

/// Spectrum CSV with header "p,q,s,class,source".
void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumEntry>& spectrum);

struct SampleEntry {
  Word word;        // the random word w
  Word palindrome;  // reverse(w)·w
  std::optional<PiImage> image;
  std::optional<ErrorCode> error;
};

struct ConjugateWitness {
  Word conjugator;  // C
  Word core;        // D
  int power = 0;    // n in U = CⁿDC⁻ⁿ
  Word palindrome;  // UV or VU with V = reverse(U)
  PiImage image;
};

struct Witness {
  Word word;
  double s = 0.0;
};

struct JorgensenBaseline {
  double value = 0.0;
  bool pass = false;  // value ≥ 1
};

enum class Verdict {
  BoundedConsistentWithGF,
  UnboundedEvidenceNondiscrete,
  ParabolicEndsDetected,
  Inconclusive,
};

std::string_view to_string(Verdict v);

struct ProbeConfig {
  int depth = 8;
  int random_samples = 200;
  std::uint64_t seed = 0;
  double s_escape = 25.0;
  double plateau = 0.01;
  // Bounds of the CⁿDC⁻ⁿ search run as part of the probe; 0 disables it.
  int conj_max_word_len = 2;
  int conj_max_power = 8;
};

struct ProbeReport {
  std::vector<SpectrumEntry> spectrum;
  std::vector<SampleEntry> random_palindrome_samples;
  std::optional<std::pair<double, double>> interval;  // over finite values
  std::vector<double> growth;  // cumulative max |s| for depth 0..depth
  std::vector<double> widths;  // interval width for depth 0..depth
  bool lower_end_parabolic = false;
  bool upper_end_parabolic = false;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Witness> witnesses;
  std::optional<ConjugateWitness> conjugate_witness;
  JorgensenBaseline jorgensen;
};

/// Throws std::invalid_argument for depth < 1.
ProbeReport probe(const Representation& rep, const ProbeConfig& config);

/// First palindrome UV or VU, U = CⁿDC⁻ⁿ and V = reverse(U), with |Π| > s_escape.
/// Words C, D range over reduced words of length ≤ max_word_len in
/// shortlex order (a < A < b < B); n = 1..max_conj_power.
std::optional<ConjugateWitness> witness_search(const Representation& rep, int max_conj_power,
                                               int max_word_len, double s_escape = 25.0);

/// |tr²A − 4| + |tr[A, B] − 2|, pass when ≥ 1.
JorgensenBaseline jorgensen_baseline(const Representation& rep);

/// Exit status used by the CLI: 0 bounded or parabolic ends, 2 unbounded, 3 inconclusive.
int exit_code(Verdict v);

/// All reduced words of length 1..max_len in shortlex order (a < A < b < B).
std::vector<Word> reduced_words_up_to(int max_len);

}  // namespace coreline
