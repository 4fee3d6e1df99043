#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foxnorm/abelian.hpp"
#include "foxnorm/equivalence.hpp"
#include "foxnorm/polytope.hpp"

namespace foxnorm {

/// v (of the first polytope) and w (of the second) are opposite when some
/// covector is strictly maximal at v and strictly minimal at w, i.e. the
/// normal cone of v meets the negated normal cone of w in an open set.
struct OppositePair {
  QPoint v;
  QPoint w;
  Covector witness;       // a covector from the open intersection
  bool v_unique = true;   // v has no other partner
  bool w_unique = true;   // w has no other partner
};

struct OppositePairing {
  std::vector<OppositePair> pairs;
  bool all_unique() const;
};

/// Opposite pairs between vertices of `a` (maximized) and `b` (minimized),
/// found by sweeping the common refinement of the two normal fans.
OppositePairing opposite_pairs(const MarkedPolytope& a, const MarkedPolytope& b);

struct SymmetryPairings {
  MarkedPolytope p_rx;
  MarkedPolytope p_ry;
  OppositePairing cross;      // v of P(r_x) against w of P(r_y)
  OppositePairing within_rx;  // v and w both of P(r_x)
};

/// Both readings of "opposite vertices". Throws NotRankTwo.
SymmetryPairings opposite_pairs(const Presentation& p);

/// Which components are compared for a pair (v, w).
enum class SymmetryReading {
  Verbatim,    // (r_y)^v  vs  sign * bar((r_x)^w), v in P(r_x), w in P(r_y)
  Transposed,  // (r_x)^v  vs  sign * bar((r_y)^w), v in P(r_x), w in P(r_y)
  WithinRx,    // (r_x)^v  vs  sign * bar((r_x)^w), v, w in P(r_x)
};

std::string to_string(SymmetryReading r);

struct PairCheck {
  enum class Outcome { Verified, Unresolved, ZeroComponent };
  SymmetryReading reading = SymmetryReading::Verbatim;
  QPoint v;
  QPoint w;
  int sign = 1;
  Outcome outcome = Outcome::Unresolved;
  RingElt lhs;
  RingElt rhs;
  std::optional<Certificate> certificate;
  bool truncated = false;
};

std::string to_string(PairCheck::Outcome o);

struct SymmetryOptions {
  /// b0 of the boundary (1 or 2). Unset: both signs are tried and reported.
  std::optional<int> boundary_components;
  int depth = 2;
  /// Passed to the search; 1 asks for a chain that uses the relator.
  int min_rewrites = 0;
  bool include_within = true;
};

struct SymmetryReport {
  Presentation presentation;
  SymmetryPairings pairings;
  SymmetryOptions options;
  std::vector<PairCheck> checks;
};

/// Runs the bounded equivalence search for every opposite pair under every
/// reading. Throws NotRankTwo.
SymmetryReport check_conjecture(const Presentation& p, const SymmetryOptions& options = {});

}  // namespace foxnorm
