#include "foxnorm/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

#include "foxnorm/error.hpp"

namespace foxnorm {

Word Word::power(Generator g, int exponent) {
  std::vector<Letter> letters;
  const Letter l{g, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
  letters.assign(static_cast<std::size_t>(std::abs(exponent)), l);
  return Word(std::move(letters));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i].is_inverse_of(letters_[i - 1])) return false;
  }
  return true;
}

bool Word::is_cyclically_reduced() const {
  if (!is_reduced()) return false;
  return letters_.size() < 2 || !letters_.front().is_inverse_of(letters_.back());
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const auto run = static_cast<long>(j - i);
    out += letters_[i].gen == Generator::x ? 'x' : 'y';
    const long exponent = letters_[i].sign * run;
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i = j;
  }
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    const char c = text[i];
    Letter letter;
    switch (c) {
      case 'x': letter = kX; break;
      case 'X': letter = kXinv; break;
      case 'y': letter = kY; break;
      case 'Y': letter = kYinv; break;
      case '^':
        throw Error(ErrorKind::MalformedExponent, "caret without a base at offset " + std::to_string(i));
      default:
        throw Error(ErrorKind::UnknownCharacter,
                    "unexpected '" + std::string(1, c) + "' at offset " + std::to_string(i));
    }
    ++i;
    skip_space();
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      const std::size_t caret = i;
      ++i;
      skip_space();
      bool negative = false;
      if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
        skip_space();
      }
      const std::size_t digits = i;
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) {
          throw Error(ErrorKind::MalformedExponent,
                      "exponent too large at offset " + std::to_string(caret));
        }
        ++i;
      }
      if (i == digits) {
        throw Error(ErrorKind::MalformedExponent,
                    "caret at offset " + std::to_string(caret) + " is not followed by digits");
      }
      if (value == 0) {
        throw Error(ErrorKind::ZeroExponent, "zero exponent at offset " + std::to_string(caret));
      }
      exponent = negative ? -value : value;
      skip_space();
    }
    if (exponent < 0) letter = letter.inverse();
    letters.insert(letters.end(), static_cast<std::size_t>(std::labs(exponent)), letter);
  }
  return Word(std::move(letters));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back().is_inverse_of(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

CyclicReduction cyclic_reduce(const Word& w) {
  const Word reduced = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = reduced.size();
  while (hi - lo >= 2 && reduced[lo].is_inverse_of(reduced[hi - 1])) {
    ++lo;
    --hi;
  }
  return {reduced.subword(lo, hi - lo), reduced.prefix(lo)};
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word(std::move(out));
}

Word operator*(const Word& u, const Word& v) {
  // Cancel across the seam only; both factors are assumed reduced by callers
  // that care, but free_reduce keeps the result correct either way.
  if (!u.is_reduced() || !v.is_reduced()) return free_reduce(concat(u, v));
  std::size_t k = 0;
  while (k < u.size() && k < v.size() && u[u.size() - 1 - k].is_inverse_of(v[k])) ++k;
  std::vector<Letter> out(u.begin(), u.end() - static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  return Word(std::move(out));
}

std::vector<Word> cyclic_permutations(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<Letter> rot(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    out.emplace_back(std::move(rot));
  }
  return out;
}

Word least_rotation(const Word& w) {
  const Word core = cyclic_reduce(w).core;
  const std::size_t n = core.size();
  if (n == 0) return core;
  // Booth's algorithm over the doubled sequence.
  std::vector<Letter> s(core.begin(), core.end());
  s.insert(s.end(), core.begin(), core.end());
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    long i = f[j - k - 1];
    while (i != -1 && s[j] != s[k + static_cast<std::size_t>(i) + 1]) {
      if (s[j] < s[k + static_cast<std::size_t>(i) + 1]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && s[j] != s[k]) {
      if (s[j] < s[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return Word(std::vector<Letter>(s.begin() + static_cast<std::ptrdiff_t>(k),
                                  s.begin() + static_cast<std::ptrdiff_t>(k + n)));
}

Word cyclic_normal_form(const Word& w) {
  Word a = least_rotation(w);
  Word b = least_rotation(invert(w));
  return a <= b ? a : b;
}

}  // namespace foxnorm
