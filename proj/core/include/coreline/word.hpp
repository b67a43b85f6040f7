#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coreline/mat2.hpp"

namespace coreline {

/// Signed generator index: +1 / −1 for the first generator and its inverse,
/// +2 / −2 for the second.
using Letter = std::int8_t;

inline constexpr Letter kFirst = 1;
inline constexpr Letter kSecond = 2;

/// Display labels of the two generators, e.g. {'a', 'b'} or {'a', 'c'}.
/// Inverses print in upper case.
struct Alphabet {
  char first = 'a';
  char second = 'b';
  bool operator==(const Alphabet&) const = default;
};

/// A freely reduced word in a rank-2 free group. The empty word is the identity.
class Word {
 public:
  Word() = default;

  /// Freely reduce an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> letters, Alphabet alphabet = {});
  /// Parse text such as "abA" (upper case = inverse). Throws ParseError.
  static Word parse(std::string_view text, Alphabet alphabet = {});

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Alphabet& alphabet() const { return alphabet_; }
  Word relabeled(Alphabet alphabet) const;

  std::string to_string() const;

  Word operator*(const Word& other) const;
  Word inverse() const;
  Word reverse() const;
  Word power(int n) const;
  bool is_palindrome() const;

  /// Conjugate to a cyclically reduced word by stripping matching ends.
  Word cyclically_reduced() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
  Alphabet alphabet_;
};

/// True when u is a cyclic rotation of v (letterwise).
bool are_rotations(const Word& u, const Word& v);

/// Homomorphic image with a ↦ A, b ↦ B.
GroupElement evaluate(const Word& w, const GroupElement& first, const GroupElement& second);

struct AbelianImage {
  long first = 0;   // exponent sum of the first generator
  long second = 0;  // exponent sum of the second generator
  bool operator==(const AbelianImage&) const = default;
};

AbelianImage abelianize(const Word& w);

struct NielsenResult {
  Word first;
  Word second;
  bool generates = false;  // reduced pair is {x^±1, y^±1}
};

/// Length-reducing Nielsen reduction of a pair. Moves are tried in a fixed
/// order and the first strictly reducing one is applied until none applies.
NielsenResult nielsen_reduce_pair(const Word& u, const Word& v);

/// Rank-2 Whitehead test: true iff w is part of a basis of F₂.
bool is_primitive(const Word& w);

enum class GeneratorSide {
  A,  // ⟨a, b⟩ → ⟨a, c⟩ with c = ab
  B,  // ⟨a, b⟩ → ⟨d, b⟩ with d = ba
};

/// φ_a(w) written in letters {a, c} (resp. φ_b(w) in {d, b}).
Word rewrite_in_generators(const Word& w, GeneratorSide side);

/// Substitute c = ab (resp. d = ba) back and reduce over {a, b}.
Word expand_generators(const Word& w, GeneratorSide side);

/// φ_a(w) (resp. φ_b(w)) as a reduced word over {a, b}.
Word apply_change_of_generators(const Word& w, GeneratorSide side);

}  // namespace coreline
