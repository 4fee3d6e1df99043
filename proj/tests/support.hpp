#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "foxnorm/abelian.hpp"
#include "foxnorm/group_ring.hpp"
#include "foxnorm/polytope.hpp"
#include "foxnorm/word.hpp"

namespace support {

using namespace foxnorm;

inline const std::string kDunfield =
    "x^2yx^-1yx^2yx^-1y^-3x^-1yx^2yx^-1yxy^-1x^-2y^-1xy^-1x^-2y^-1xy^3xy^-1x^-2y^-1xy^-1x^-1y";

inline Letter random_letter(std::mt19937_64& rng) {
  static constexpr Letter kAll[] = {kX, kXinv, kY, kYinv};
  return kAll[rng() % 4];
}

/// Uniform reduced word of the given length.
inline Word random_reduced_word(std::mt19937_64& rng, std::size_t length) {
  std::vector<Letter> out;
  while (out.size() < length) {
    const Letter l = random_letter(rng);
    if (!out.empty() && out.back().is_inverse_of(l)) continue;
    out.push_back(l);
  }
  return Word(out);
}

/// Arbitrary (usually unreduced) word.
inline Word random_raw_word(std::mt19937_64& rng, std::size_t length) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(random_letter(rng));
  return Word(out);
}

/// Cyclically reduced relator with both exponent sums zero and length at most
/// 2 * half; may come out empty.
inline Word random_zero_sum_relator(std::mt19937_64& rng, std::size_t half) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < half; ++i) {
    const Letter l = (rng() % 2) ? kX : kY;
    letters.push_back(l);
    letters.push_back(l.inverse());
  }
  std::shuffle(letters.begin(), letters.end(), rng);
  return cyclic_reduce(free_reduce(Word(letters))).core;
}

/// Non-empty cyclically reduced zero-sum relator of length at most max_len.
inline Word nonempty_zero_sum_relator(std::mt19937_64& rng, std::size_t max_len) {
  for (;;) {
    const Word r = random_zero_sum_relator(rng, 2 + rng() % (max_len / 2 - 1));
    if (!r.empty()) return r;
  }
}

/// Cyclically reduced relator whose exponent sums are not both zero.
inline Word random_rank_one_relator(std::mt19937_64& rng, std::size_t max_len) {
  for (;;) {
    const Word r = cyclic_reduce(random_reduced_word(rng, 2 + rng() % (max_len - 1))).core;
    if (r.empty()) continue;
    std::int64_t a = 0;
    std::int64_t b = 0;
    for (Letter l : r) (l.gen == Generator::x ? a : b) += l.sign;
    if (a != 0 || b != 0) return r;
  }
}

inline RingElt random_ring_elt(std::mt19937_64& rng, std::size_t terms, std::size_t max_len) {
  RingElt f;
  for (std::size_t i = 0; i < terms; ++i) {
    const std::int64_t c = static_cast<std::int64_t>(rng() % 7) - 3;
    f.add_term(random_reduced_word(rng, rng() % (max_len + 1)), c);
  }
  return f;
}

inline LaurentElt random_laurent(std::mt19937_64& rng, int rank, std::size_t terms, std::int64_t range) {
  LaurentElt f(rank);
  while (f.is_zero()) {
    for (std::size_t i = 0; i < terms; ++i) {
      const std::int64_t a = static_cast<std::int64_t>(rng() % (2 * range + 1)) - range;
      const std::int64_t b = rank == 2 ? static_cast<std::int64_t>(rng() % (2 * range + 1)) - range : 0;
      const std::int64_t c = static_cast<std::int64_t>(rng() % 5) - 2;
      f.add_term({a, b}, c == 0 ? 1 : c);
    }
  }
  return f;
}

/// Hull of random lattice points with random marks.
inline MarkedPolytope random_polytope(std::mt19937_64& rng, int rank, std::size_t points, std::int64_t range) {
  std::vector<QPoint> pts;
  for (std::size_t i = 0; i < points; ++i) {
    const std::int64_t a = static_cast<std::int64_t>(rng() % (2 * range + 1)) - range;
    const std::int64_t b = rank == 2 ? static_cast<std::int64_t>(rng() % (2 * range + 1)) - range : 0;
    pts.push_back(QPoint::lattice({a, b}));
  }
  MarkedPolytope p = hull(pts, rank);
  for (std::size_t i = 0; i < p.size(); ++i) p.set_marked(i, rng() % 2 == 0);
  return p;
}

inline Covector random_covector(std::mt19937_64& rng, int rank, std::int64_t range) {
  const auto pick = [&] { return static_cast<std::int64_t>(rng() % (2 * range + 1)) - range; };
  return rank == 2 ? Covector::of(pick(), pick()) : Covector::of(pick());
}

}  // namespace support
