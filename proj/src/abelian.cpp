#include "foxnorm/abelian.hpp"

#include <cstdlib>
#include <numeric>

#include "foxnorm/error.hpp"

namespace foxnorm {

LatticePoint AbelianizationMap::operator()(std::int64_t x_sum, std::int64_t y_sum) const {
  return {x_sum * image_x[0] + y_sum * image_y[0], x_sum * image_x[1] + y_sum * image_y[1]};
}

LatticePoint AbelianizationMap::operator()(const Word& w) const {
  const ExponentSums s = exponent_sums(w);
  return (*this)(s.x, s.y);
}

Presentation::Presentation(Word relator) : relator_(std::move(relator)) {
  if (relator_.empty()) throw Error(ErrorKind::EmptyRelator, "the relator is trivial");
  if (!relator_.is_cyclically_reduced()) {
    throw Error(ErrorKind::NotCyclicallyReduced, relator_.to_string());
  }
}

Presentation Presentation::from_text(std::string_view text) {
  Word core = cyclic_reduce(parse_word(text)).core;
  if (core.empty()) {
    throw Error(ErrorKind::EmptyRelator, "'" + std::string(text) + "' reduces to the empty word");
  }
  return Presentation(std::move(core));
}

std::int64_t LaurentElt::coefficient(const LatticePoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t LaurentElt::coefficient_sum() const {
  std::int64_t s = 0;
  for (const auto& [p, c] : terms_) s += c;
  return s;
}

void LaurentElt::add_term(const LatticePoint& p, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentElt operator+(const LaurentElt& a, const LaurentElt& b) {
  if (a.rank_ != b.rank_) throw Error(ErrorKind::RankMismatch, "Laurent sum");
  LaurentElt out = a;
  for (const auto& [p, c] : b.terms_) out.add_term(p, c);
  return out;
}

LaurentElt operator*(const LaurentElt& a, const LaurentElt& b) {
  if (a.rank_ != b.rank_) throw Error(ErrorKind::RankMismatch, "Laurent product");
  LaurentElt out(a.rank_);
  for (const auto& [p, cp] : a.terms_) {
    for (const auto& [q, cq] : b.terms_) out.add_term({p[0] + q[0], p[1] + q[1]}, cp * cq);
  }
  return out;
}

ExponentSums exponent_sums(const Word& r) {
  ExponentSums s;
  for (Letter l : r) (l.gen == Generator::x ? s.x : s.y) += l.sign;
  return s;
}

int betti(const Presentation& p) {
  const ExponentSums s = exponent_sums(p.relator());
  return s.x == 0 && s.y == 0 ? 2 : 1;
}

AbelianizationMap psi(const Presentation& p) {
  const ExponentSums s = exponent_sums(p.relator());
  if (s.x == 0 && s.y == 0) return AbelianizationMap{};
  // psi(m, n) = (b m - a n) / g kills (a, b) and maps onto Z.
  const std::int64_t g = std::gcd(s.x, s.y);
  return AbelianizationMap{1, {s.y / g, 0}, {-s.x / g, 0}};
}

LaurentElt laurent_image(const RingElt& f, const AbelianizationMap& map) {
  LaurentElt out(map.rank);
  for (const auto& [w, c] : f.terms()) out.add_term(map(w), c);
  return out;
}

RingElt component(const RingElt& f, const LatticePoint& v, const AbelianizationMap& map) {
  RingElt out;
  for (const auto& [w, c] : f.terms()) {
    if (map(w) == v) out.add_term(w, c);
  }
  return out;
}

std::map<LatticePoint, RingElt> components(const RingElt& f, const AbelianizationMap& map) {
  std::map<LatticePoint, RingElt> out;
  for (const auto& [w, c] : f.terms()) out[map(w)].add_term(w, c);
  return out;
}

bool is_simple(const Presentation& p) {
  const ExponentSums s = exponent_sums(p.relator());
  return s.x == 0 && s.y != 0;
}

Word NielsenMove::apply(const Word& w) const {
  Word image_x = Word::power(Generator::x, 1);
  Word image_y = Word::power(Generator::y, 1);
  switch (kind) {
    case Kind::MultiplyXByY:
      image_x = concat(image_x, Word::power(Generator::y, static_cast<int>(power)));
      break;
    case Kind::MultiplyYByX:
      image_y = concat(image_y, Word::power(Generator::x, static_cast<int>(power)));
      break;
    case Kind::Swap:
      std::swap(image_x, image_y);
      break;
    case Kind::InvertX:
      image_x = invert(image_x);
      break;
    case Kind::InvertY:
      image_y = invert(image_y);
      break;
  }
  const Word inv_x = invert(image_x);
  const Word inv_y = invert(image_y);
  std::vector<Letter> out;
  for (Letter l : w) {
    const Word& img = l.gen == Generator::x ? (l.sign > 0 ? image_x : inv_x)
                                            : (l.sign > 0 ? image_y : inv_y);
    out.insert(out.end(), img.begin(), img.end());
  }
  return free_reduce(Word(std::move(out)));
}

std::array<std::array<std::int64_t, 2>, 2> NielsenMove::matrix() const {
  // Columns are the exponent sums of the images of x and y.
  switch (kind) {
    case Kind::MultiplyXByY: return {{{1, 0}, {power, 1}}};
    case Kind::MultiplyYByX: return {{{1, power}, {0, 1}}};
    case Kind::Swap: return {{{0, 1}, {1, 0}}};
    case Kind::InvertX: return {{{-1, 0}, {0, 1}}};
    case Kind::InvertY: return {{{1, 0}, {0, -1}}};
  }
  return {{{1, 0}, {0, 1}}};
}

std::string NielsenMove::to_string() const {
  switch (kind) {
    case Kind::MultiplyXByY: return "x -> x" + Word::power(Generator::y, static_cast<int>(power)).to_string();
    case Kind::MultiplyYByX: return "y -> y" + Word::power(Generator::x, static_cast<int>(power)).to_string();
    case Kind::Swap: return "x <-> y";
    case Kind::InvertX: return "x -> x^-1";
    case Kind::InvertY: return "y -> y^-1";
  }
  return "?";
}

namespace {

using Mat2 = std::array<std::array<std::int64_t, 2>, 2>;

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return c;
}

int sgn(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

Word SimpleConversion::apply_trace(const Word& w) const {
  Word out = w;
  for (const auto& m : trace) out = m.apply(out);
  return out;
}

std::array<std::array<std::int64_t, 2>, 2> SimpleConversion::matrix() const {
  Mat2 m{{{1, 0}, {0, 1}}};
  for (const auto& move : trace) m = mat_mul(move.matrix(), m);
  return m;
}

SimpleConversion to_simple(const Presentation& p) {
  if (betti(p) != 1) throw Error(ErrorKind::NotRankOne, "b1 = 2 for " + p.relator().to_string());
  if (is_simple(p)) return {p, {}};

  std::vector<NielsenMove> trace;
  ExponentSums s = exponent_sums(p.relator());
  auto push = [&](NielsenMove m) {
    const Mat2 a = m.matrix();
    s = {a[0][0] * s.x + a[0][1] * s.y, a[1][0] * s.x + a[1][1] * s.y};
    trace.push_back(m);
  };
  while (s.x != 0 && s.y != 0) {
    if (std::llabs(s.x) >= std::llabs(s.y)) {
      // y -> y x^k changes the x-sum by k * b.
      const std::int64_t k = -sgn(s.x) * sgn(s.y) * (std::llabs(s.x) / std::llabs(s.y));
      push({NielsenMove::Kind::MultiplyYByX, k});
    } else {
      const std::int64_t k = -sgn(s.x) * sgn(s.y) * (std::llabs(s.y) / std::llabs(s.x));
      push({NielsenMove::Kind::MultiplyXByY, k});
    }
  }
  if (s.y == 0) push({NielsenMove::Kind::Swap, 0});
  if (s.y < 0) push({NielsenMove::Kind::InvertY, 0});

  SimpleConversion out{p, std::move(trace)};
  Word core = cyclic_reduce(out.apply_trace(p.relator())).core;
  out.presentation = Presentation(std::move(core));
  return out;
}

}  // namespace foxnorm
