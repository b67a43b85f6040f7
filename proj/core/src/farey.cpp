#include "coreline/farey.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace coreline {

Rational Rational::make(long p, long q) {
  if (p < 0 || q < 0) throw Error(ErrorCode::InvalidRational, "negative rationals are not indexed");
  if (p == 0 && q == 0) throw Error(ErrorCode::InvalidRational, "0/0");
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorCode::InvalidRational, std::to_string(p) + "/" + std::to_string(q) + " is not reduced");
  }
  return {p, q};
}

Rational Rational::parse(std::string_view text) {
  const auto parse_long = [&](std::string_view part) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      throw Error(ErrorCode::InvalidRational, "cannot parse '" + std::string(text) + "'");
    }
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return make(parse_long(text), 1);
  return make(parse_long(text.substr(0, slash)), parse_long(text.substr(slash + 1)));
}

std::string Rational::to_string() const { return std::to_string(p) + "/" + std::to_string(q); }

bool slope_less(const Rational& x, const Rational& y) { return x.p * y.q < y.p * x.q; }

namespace {

void require_valid(const Rational& r) { (void)Rational::make(r.p, r.q); }

}  // namespace

std::pair<Rational, Rational> farey_parents(const Rational& r) {
  require_valid(r);
  if ((r.p == 0 && r.q == 1) || (r.p == 1 && r.q == 0)) {
    throw Error(ErrorCode::InvalidRational, r.to_string() + " is a root of the Farey tree");
  }
  Rational left{0, 1};
  Rational right{1, 0};
  for (;;) {
    const Rational mid{left.p + right.p, left.q + right.q};
    if (mid == r) return {left, right};
    if (slope_less(r, mid)) {
      right = mid;
    } else {
      left = mid;
    }
  }
}

int farey_level(const Rational& r) {
  require_valid(r);
  if ((r.p == 0 && r.q == 1) || (r.p == 1 && r.q == 0)) return 0;
  Rational left{0, 1};
  Rational right{1, 0};
  for (int level = 1;; ++level) {
    const Rational mid{left.p + right.p, left.q + right.q};
    if (mid == r) return level;
    (slope_less(r, mid) ? right : left) = mid;
  }
}

Word christoffel(const Rational& r) {
  require_valid(r);
  const long n = r.p + r.q;
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(n));
  for (long k = 1; k <= n; ++k) {
    const bool step_up = (k * r.p) / n > ((k - 1) * r.p) / n;
    letters.push_back(step_up ? kSecond : kFirst);
  }
  return Word::reduce(letters);
}

namespace {

Word palindromic_rotation(const Rational& r) {
  const Word c = christoffel(r);
  const auto letters = c.letters();
  const std::size_t n = letters.size();
  // Positive words stay reduced under rotation, so compare letters in place.
  const auto palindromic_at = [&](std::size_t shift) {
    for (std::size_t i = 0, j = n - 1; i < j; ++i, --j) {
      if (letters[(shift + i) % n] != letters[(shift + j) % n]) return false;
    }
    return true;
  };
  std::optional<Word> found;
  int count = 0;
  std::vector<Letter> rotated(n);
  for (std::size_t shift = 0; shift < n; ++shift) {
    if (!palindromic_at(shift)) continue;
    for (std::size_t i = 0; i < n; ++i) rotated[i] = letters[(i + shift) % n];
    Word w = Word::reduce(rotated);
    if (found && *found == w) continue;  // periodic words repeat rotations
    found = std::move(w);
    ++count;
  }
  if (count != 1) {
    throw Error(ErrorCode::SchemeViolation,
                r.to_string() + ": expected exactly one palindromic rotation, found " + std::to_string(count));
  }
  return *found;
}

}  // namespace

PrimitiveWord primitive_word(const Rational& r) {
  require_valid(r);
  if ((r.p * r.q) % 2 == 0) return {r, palindromic_rotation(r), std::nullopt};

  const auto [lo, hi] = farey_parents(r);
  Word f1 = primitive_word(lo).word;
  Word f2 = primitive_word(hi).word;
  Word product = f1 * f2;
  if (!are_rotations(product, christoffel(r))) {
    throw Error(ErrorCode::SchemeViolation,
                r.to_string() + ": product of parent palindromes is not conjugate to the Christoffel word");
  }
  return {r, std::move(product), std::make_pair(std::move(f1), std::move(f2))};
}

bool are_associates(const Rational& x, const Rational& y) {
  require_valid(x);
  require_valid(y);
  return std::labs(x.p * y.q - y.p * x.q) == 1;
}

std::vector<FareyNode> enumerate(int depth) {
  if (depth < 0) throw std::invalid_argument("enumerate: depth must be non-negative");
  std::vector<FareyNode> nodes;
  const auto add = [&](const Rational& r, std::optional<std::pair<Rational, Rational>> parents, int level) {
    PrimitiveWord pw = primitive_word(r);
    nodes.push_back({r, parents, level, std::move(pw.word), std::move(pw.factors)});
  };
  add({0, 1}, std::nullopt, 0);
  add({1, 0}, std::nullopt, 0);

  // Breadth-first over Stern–Brocot intervals (left, right).
  std::vector<std::pair<Rational, Rational>> frontier{{{0, 1}, {1, 0}}};
  for (int level = 1; level <= depth; ++level) {
    std::vector<std::pair<Rational, Rational>> next;
    next.reserve(frontier.size() * 2);
    for (const auto& [left, right] : frontier) {
      const Rational mid{left.p + right.p, left.q + right.q};
      add(mid, std::make_pair(left, right), level);
      next.emplace_back(left, mid);
      next.emplace_back(mid, right);
    }
    frontier = std::move(next);
  }
  std::sort(nodes.begin(), nodes.end(), [](const FareyNode& x, const FareyNode& y) {
    return std::pair(x.slope.q, x.slope.p) < std::pair(y.slope.q, y.slope.p);
  });
  return nodes;
}

void write_nodes_csv(std::ostream& out, const std::vector<FareyNode>& nodes) {
  out << "p,q,word,is_palindrome,factor1,factor2\n";
  for (const FareyNode& n : nodes) {
    out << n.slope.p << ',' << n.slope.q << ',' << n.word.to_string() << ','
        << (n.word.is_palindrome() ? "true" : "false") << ',';
    if (n.factors) out << n.factors->first.to_string() << ',' << n.factors->second.to_string();
    else out << ',';
    out << '\n';
  }
}

}  // namespace coreline
