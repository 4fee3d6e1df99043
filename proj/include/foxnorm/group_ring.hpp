#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "foxnorm/word.hpp"

namespace foxnorm {

/// Element of the integral group ring Z[F] of the free group on x, y.
///
/// Terms are keyed by freely reduced words and never carry a zero
/// coefficient, so equality is equality of term sets.
class RingElt {
 public:
  using Terms = std::map<Word, std::int64_t>;

  RingElt() = default;
  explicit RingElt(const Terms& raw);

  static RingElt one() { return monomial(Word{}); }
  static RingElt monomial(const Word& w, std::int64_t coefficient = 1);
  /// Parses "x - 1", "2xy - X + 3" style sums of words; used by tests and the CLI.
  static RingElt parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coefficient(const Word& w) const;

  /// Adds c * w; w is reduced first.
  void add_term(const Word& w, std::int64_t c);

  RingElt& operator+=(const RingElt& o);
  RingElt& operator-=(const RingElt& o);

  friend RingElt operator+(RingElt a, const RingElt& b) { return a += b; }
  friend RingElt operator-(RingElt a, const RingElt& b) { return a -= b; }
  friend RingElt operator-(const RingElt& a);
  friend RingElt operator*(const RingElt& a, const RingElt& b);
  friend RingElt operator*(std::int64_t c, const RingElt& a);

  friend bool operator==(const RingElt&, const RingElt&) = default;
  friend bool operator<(const RingElt& a, const RingElt& b) { return a.terms_ < b.terms_; }

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Left and right multiplication by a group element.
RingElt left_multiply(const Word& g, const RingElt& f);
RingElt right_multiply(const RingElt& f, const Word& h);

/// The anti-involution induced by g -> g^-1.
RingElt involution(const RingElt& f);

/// True iff f = +-g for a single group element g.
bool is_monomial(const RingElt& f);

}  // namespace foxnorm
