#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foxnorm {

enum class Generator : std::uint8_t { x = 0, y = 1 };

/// A generator of F(x, y) or its inverse.
struct Letter {
  Generator gen = Generator::x;
  std::int8_t sign = 1;

  constexpr Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  constexpr bool is_inverse_of(Letter o) const { return gen == o.gen && sign == -o.sign; }

  // x < X < y < Y
  constexpr int code() const { return 2 * static_cast<int>(gen) + (sign < 0 ? 1 : 0); }

  friend constexpr bool operator==(Letter a, Letter b) { return a.code() == b.code(); }
  friend constexpr auto operator<=>(Letter a, Letter b) { return a.code() <=> b.code(); }
};

inline constexpr Letter kX{Generator::x, 1};
inline constexpr Letter kXinv{Generator::x, -1};
inline constexpr Letter kY{Generator::y, 1};
inline constexpr Letter kYinv{Generator::y, -1};

/// A finite sequence of letters. A Word is not reduced unless an operation
/// says so; `free_reduce` produces the normal form in F.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word power(Generator g, int exponent);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }

  bool is_reduced() const;
  bool is_cyclically_reduced() const;

  /// Canonical text form, e.g. "x^2yx^-1"; the empty word prints as "1".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// Parses the x/y/X/Y alphabet with optional caret exponents. No reduction.
/// Grammar: word := term+; term := letter ('^' '-'? digit+)?
Word parse_word(std::string_view text);

Word free_reduce(const Word& w);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w = conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(const Word& w);

Word invert(const Word& w);
/// Juxtaposition, no cancellation.
Word concat(const Word& u, const Word& v);
/// Product in F: concatenation followed by free reduction.
Word operator*(const Word& u, const Word& v);

/// All |w| rotations of w, starting with w itself.
std::vector<Word> cyclic_permutations(const Word& w);

/// Least rotation of the cyclically reduced core, minimized over w and w^-1:
/// a complete invariant of the conjugacy class up to inversion.
Word cyclic_normal_form(const Word& w);
/// Least rotation of the cyclically reduced core (conjugacy class invariant).
Word least_rotation(const Word& w);

}  // namespace foxnorm
