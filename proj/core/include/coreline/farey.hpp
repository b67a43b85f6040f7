#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coreline/word.hpp"

namespace coreline {

/// Non-negative extended rational p/q with gcd(p, q) = 1; 1/0 is ∞.
struct Rational {
  long p = 0;
  long q = 1;

  /// Throws InvalidRational for negative parts, 0/0 or non-reduced pairs.
  static Rational make(long p, long q);
  /// Parse "p/q" (or "p" for p/1).
  static Rational parse(std::string_view text);

  std::string to_string() const;
  bool operator==(const Rational&) const = default;
};

/// Strict order of extended rationals (1/0 greatest).
bool slope_less(const Rational& x, const Rational& y);

/// Stern–Brocot parents (smaller, larger) of p/q. Throws InvalidRational for 0/1 and 1/0.
std::pair<Rational, Rational> farey_parents(const Rational& r);

/// Lower Christoffel word: q letters a, p letters b.
Word christoffel(const Rational& r);

/// e_{p/q}. For pq even the unique palindromic rotation of the Christoffel
/// word; for pq odd the product of the parents' words, smaller slope first,
/// with its factorization recorded.
struct PrimitiveWord {
  Rational slope;
  Word word;
  std::optional<std::pair<Word, Word>> factors;
};

PrimitiveWord primitive_word(const Rational& r);

/// |ps − rq| = 1.
bool are_associates(const Rational& x, const Rational& y);

struct FareyNode {
  Rational slope;
  std::optional<std::pair<Rational, Rational>> parents;
  int level = 0;  // Stern–Brocot depth; 0 for 0/1 and 1/0
  Word word;
  std::optional<std::pair<Word, Word>> factors;
};

/// Every rational within `depth` mediant steps of (0/1, 1/0), sorted by (q, p).
/// Throws std::invalid_argument for negative depth.
std::vector<FareyNode> enumerate(int depth);

/// Stern–Brocot depth of r.
int farey_level(const Rational& r);

/// CSV with header "p,q,word,is_palindrome,factor1,factor2".
void write_nodes_csv(std::ostream& out, const std::vector<FareyNode>& nodes);

}  // namespace coreline
