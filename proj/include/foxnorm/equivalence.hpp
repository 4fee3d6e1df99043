#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foxnorm/group_ring.hpp"
#include "foxnorm/word.hpp"

namespace foxnorm {

/// Replacement of the subword `removed` at `position` of the term `term` by
/// `inserted`, where removed * inserted^-1 is a cyclic permutation of r or
/// r^-1 and hence trivial in the one-relator group.
struct Rewrite {
  enum class Side { P, Q };
  Side side = Side::Q;
  Word term;
  std::size_t position = 0;
  Word removed;
  Word inserted;

  friend bool operator==(const Rewrite&, const Rewrite&) = default;
};

/// Witness for p = g q h in Z[<x,y|r>]: after applying the rewrites (in
/// order, each to its side) one has p' = g q' h exactly in Z[F].
struct Certificate {
  Word left;
  Word right;
  std::vector<Rewrite> rewrites;
};

struct EquivalenceVerdict {
  bool verified = false;
  std::optional<Certificate> certificate;
  /// Number of rewrite combinations examined; diagnostic only.
  std::size_t states_examined = 0;
  /// The rewrite frontier hit its size ceiling before the depth was exhausted.
  bool truncated = false;
};

/// Bounded search for g, h in F and at most `depth` relator rewrites with
/// p = g q h in Z[pi]. Rewrites are split between the two sides, at most
/// ceil(depth / 2) per side, and fewer rewrites are always tried first.
/// A verified result has been replayed by validate_certificate before it is
/// returned. An unverified result is not a proof of inequivalence.
/// Combinations with fewer than `min_rewrites` rewrites are skipped, which
/// surfaces chains that pass through the relator even when a shorter
/// certificate exists.
EquivalenceVerdict equiv_monomial_translate(const RingElt& p, const RingElt& q, int depth, const Word& relator,
                                            int min_rewrites = 0);

/// Solves p = g q h in Z[F] with no rewriting.
std::optional<std::pair<Word, Word>> solve_translate(const RingElt& p, const RingElt& q);

/// Applies a rewrite, checking that it is one; returns nothing when the
/// rewrite does not apply to f or is not justified by the relator.
std::optional<RingElt> apply_rewrite(const RingElt& f, const Rewrite& rw, const Word& relator);

/// Re-checks a certificate by plain ring arithmetic.
bool validate_certificate(const RingElt& p, const RingElt& q, const Certificate& cert, const Word& relator);

/// Solves h^-1 a h = b in F, if possible.
std::optional<Word> conjugator(const Word& a, const Word& b);

}  // namespace foxnorm
