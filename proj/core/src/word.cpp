#include "coreline/word.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <optional>

namespace coreline {

namespace {

int generator_index(Letter l) { return std::abs(l) - 1; }

// Letter substitution x ↦ image[x]; inverse letters map to the inverted image.
using Substitution = std::array<std::vector<Letter>, 2>;

std::vector<Letter> invert(std::span<const Letter> letters) {
  std::vector<Letter> out(letters.rbegin(), letters.rend());
  for (Letter& l : out) l = static_cast<Letter>(-l);
  return out;
}

std::vector<Letter> substitute(std::span<const Letter> letters, const Substitution& sub) {
  std::vector<Letter> out;
  for (Letter l : letters) {
    const std::vector<Letter>& image = sub[generator_index(l)];
    if (l > 0) {
      out.insert(out.end(), image.begin(), image.end());
    } else {
      const std::vector<Letter> inv = invert(image);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return out;
}

}  // namespace

Word Word::reduce(std::span<const Letter> letters, Alphabet alphabet) {
  Word w;
  w.alphabet_ = alphabet;
  for (Letter l : letters) {
    if (!w.letters_.empty() && w.letters_.back() == -l) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::parse(std::string_view text, Alphabet alphabet) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    if (ch == '1' && text.size() == 1) break;  // "1" is the identity
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    const bool inverse = std::isupper(static_cast<unsigned char>(ch)) != 0;
    Letter l = 0;
    if (lower == alphabet.first) l = kFirst;
    if (lower == alphabet.second) l = kSecond;
    if (l == 0) {
      throw Error(ErrorCode::ParseError, "unexpected letter '" + std::string(1, ch) + "' in word");
    }
    letters.push_back(inverse ? static_cast<Letter>(-l) : l);
  }
  return reduce(letters, alphabet);
}

Word Word::relabeled(Alphabet alphabet) const {
  Word w = *this;
  w.alphabet_ = alphabet;
  return w;
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) {
    const char base = generator_index(l) == 0 ? alphabet_.first : alphabet_.second;
    out.push_back(l > 0 ? base : static_cast<char>(std::toupper(static_cast<unsigned char>(base))));
  }
  return out;
}

Word Word::operator*(const Word& other) const {
  std::vector<Letter> joined = letters_;
  joined.insert(joined.end(), other.letters_.begin(), other.letters_.end());
  return reduce(joined, alphabet_);
}

Word Word::inverse() const { return reduce(invert(letters_), alphabet_); }

Word Word::reverse() const {
  Word w = *this;
  std::reverse(w.letters_.begin(), w.letters_.end());
  return w;
}

Word Word::power(int n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word result;
  result.alphabet_ = alphabet_;
  for (int i = 0; i < std::abs(n); ++i) result = result * base;
  return result;
}

bool Word::is_palindrome() const { return std::equal(letters_.begin(), letters_.end(), letters_.rbegin()); }

Word Word::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  Word w;
  w.alphabet_ = alphabet_;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                    letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  return w;
}

bool are_rotations(const Word& u, const Word& v) {
  if (u.length() != v.length()) return false;
  if (u.empty()) return true;
  std::vector<Letter> doubled(v.letters().begin(), v.letters().end());
  doubled.insert(doubled.end(), v.letters().begin(), v.letters().end());
  return std::search(doubled.begin(), doubled.end(), u.letters().begin(), u.letters().end()) !=
         doubled.end();
}

GroupElement evaluate(const Word& w, const GroupElement& first, const GroupElement& second) {
  const std::array<GroupElement, 2> gens{first, second};
  const std::array<GroupElement, 2> invs{first.inverse(), second.inverse()};
  GroupElement result;
  for (Letter l : w.letters()) {
    const int i = generator_index(l);
    result = result * (l > 0 ? gens[i] : invs[i]);
  }
  return result;
}

AbelianImage abelianize(const Word& w) {
  AbelianImage img;
  for (Letter l : w.letters()) {
    const long sign = l > 0 ? 1 : -1;
    (generator_index(l) == 0 ? img.first : img.second) += sign;
  }
  return img;
}

NielsenResult nielsen_reduce_pair(const Word& u0, const Word& v0) {
  Word u = u0;
  Word v = v0;
  for (;;) {
    if (u.empty() || v.empty()) break;
    const std::size_t total = u.length() + v.length();
    // Move order: u ← uv, uV, vu, Vu; then v ← vu, vU, uv, Uv.
    const Word vi = v.inverse();
    const Word ui = u.inverse();
    const std::array<Word, 4> u_moves{u * v, u * vi, v * u, vi * u};
    const std::array<Word, 4> v_moves{v * u, v * ui, u * v, ui * v};
    bool moved = false;
    for (const Word& cand : u_moves) {
      if (cand.length() + v.length() < total) {
        u = cand;
        moved = true;
        break;
      }
    }
    if (!moved) {
      for (const Word& cand : v_moves) {
        if (u.length() + cand.length() < total) {
          v = cand;
          moved = true;
          break;
        }
      }
    }
    if (!moved) break;
  }
  NielsenResult result{u, v, false};
  if (u.length() == 1 && v.length() == 1) {
    result.generates = generator_index(u.letters()[0]) != generator_index(v.letters()[0]);
  }
  return result;
}

bool is_primitive(const Word& w) {
  // The 12 non-permutation Whitehead automorphisms of F₂: a multiplier
  // m ∈ {a, A, b, B} acts on the other generator z by z ↦ zm, z ↦ m⁻¹z or z ↦ m⁻¹zm.
  static const std::vector<Substitution> automorphisms = [] {
    std::vector<Substitution> out;
    for (Letter m : {kFirst, static_cast<Letter>(-kFirst), kSecond, static_cast<Letter>(-kSecond)}) {
      const int mi = generator_index(m);
      const Letter z = static_cast<Letter>(mi == 0 ? kSecond : kFirst);
      const int zi = generator_index(z);
      const Letter minv = static_cast<Letter>(-m);
      for (const std::vector<Letter>& image :
           {std::vector<Letter>{z, m}, std::vector<Letter>{minv, z}, std::vector<Letter>{minv, z, m}}) {
        Substitution sub;
        sub[mi] = {static_cast<Letter>(mi + 1)};
        sub[zi] = image;
        out.push_back(sub);
      }
    }
    return out;
  }();

  Word current = w.cyclically_reduced();
  if (current.empty()) return false;
  for (;;) {
    if (current.length() == 1) return true;
    std::optional<Word> shorter;
    for (const Substitution& sub : automorphisms) {
      Word image = Word::reduce(substitute(current.letters(), sub)).cyclically_reduced();
      if (image.length() < current.length()) {
        shorter = std::move(image);
        break;
      }
    }
    if (!shorter) return false;
    current = std::move(*shorter);
  }
}

Word apply_change_of_generators(const Word& w, GeneratorSide side) {
  Substitution sub;
  if (side == GeneratorSide::A) {
    sub[0] = {kFirst};
    sub[1] = {kFirst, kSecond};
  } else {
    sub[0] = {kSecond, kFirst};
    sub[1] = {kSecond};
  }
  return Word::reduce(substitute(w.letters(), sub));
}

Word rewrite_in_generators(const Word& w, GeneratorSide side) {
  // φ_a(w) = w(a, ab) = w(a, c): the letters stay, only their meaning changes.
  return w.relabeled(side == GeneratorSide::A ? Alphabet{'a', 'c'} : Alphabet{'d', 'b'});
}

Word expand_generators(const Word& w, GeneratorSide side) {
  return apply_change_of_generators(w.relabeled({}), side);
}

}  // namespace coreline
