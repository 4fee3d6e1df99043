#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foxnorm/abelian.hpp"
#include "foxnorm/polytope.hpp"

namespace foxnorm {

/// Lattice walk spelled by the relator: x steps by (1,0), y by (0,1).
struct WalkTrace {
  std::vector<LatticePoint> points;  // p_0 = origin, ..., p_n

  bool closed() const { return points.front() == points.back(); }
  /// Visits to v among p_0, ..., p_{n-1}; the start and end of a closed walk
  /// count once.
  std::size_t multiplicity(const LatticePoint& v) const;
};

WalkTrace walk_trace(const Word& r);

/// The marked polytope read off the walk: hull C of the trace, vertices of C
/// marked when visited once, then the midpoints of the unit squares inside C
/// that have a vertex of C as a corner. Requires b1 = 2.
/// Throws NotRankTwo or WalkMarkingInconsistent.
MarkedPolytope polytope_via_walk(const Presentation& p);

/// Intermediate data of the Fox-derivative construction.
struct FoxConstruction {
  AbelianizationMap map;                       // psi of the presentation actually differentiated
  std::optional<SimpleConversion> conversion;  // set when a b1 = 1 input was not simple
  int orientation = 1;                         // +-1, converted coordinates -> input coordinates
  RingElt r_x;
  RingElt r_y;
  MarkedPolytope m_rx;
  MarkedPolytope m_ry;
  MarkedPolytope from_ry;                  // M(r_y) - M(x - 1), converted coordinates
  std::optional<MarkedPolytope> from_rx;   // M(r_x) - M(y - 1), rank 2 only
  MarkedPolytope result;                   // in the input's psi coordinates
};

/// b1 = 2: M(r_y) - M(x-1), cross-checked against M(r_x) - M(y-1).
/// b1 = 1: the same difference after Nielsen conversion to a simple
/// presentation, mapped back to the input's psi coordinates.
/// Throws DifferenceDoesNotExist, InconsistentMarkings or FoxCrossCheckFailed.
FoxConstruction fox_construction(const Presentation& p);
MarkedPolytope polytope_via_fox(const Presentation& p);

enum class Method { Walk, Fox, Both };
enum class Provenance { Walk, Fox, BothAgree };

std::string to_string(Provenance p);
std::string to_string(Method m);

struct FiberedVerdict {
  enum class Kind { Fibered, NotFibered, IndeterminateTie };
  Kind kind = Kind::IndeterminateTie;
  std::optional<QPoint> vertex;  // the vertex phi pairs maximally with
};

std::string to_string(FiberedVerdict::Kind k);

struct NormQuery {
  Covector phi;
  Rational norm;
  FiberedVerdict fibered;
};

/// M_pi of a presentation together with how it was obtained and any
/// evaluated queries. Immutable once built apart from appended queries.
struct NormReport {
  Presentation presentation;
  int betti = 2;
  AbelianizationMap map;
  MarkedPolytope polytope;
  Provenance provenance = Provenance::Fox;
  std::optional<SimpleConversion> conversion;
  std::vector<NormQuery> queries;

  /// Evaluates phi (in psi coordinates) and records the query.
  const NormQuery& query(const Covector& phi);
};

/// Method::Both runs both constructions when b1 = 2 and requires them to
/// agree up to translation; for b1 = 1 it falls back to Fox.
NormReport compute_marked_polytope(const Presentation& p, Method method = Method::Both);

/// x_N(phi) = th_{M_pi}(phi). Throws RankMismatch when phi's rank != b1.
Rational thurston_norm(const NormReport& report, const Covector& phi);
Rational thurston_norm(const Presentation& p, const Covector& phi);

/// Fibered iff phi pairs maximally with a marked vertex; a tie (including
/// phi = 0) is left undetermined.
FiberedVerdict fibered(const NormReport& report, const Covector& phi);
FiberedVerdict fibered(const Presentation& p, const Covector& phi);

struct UnitBall {
  /// Set unless the norm vanishes identically (M_pi a point).
  std::optional<DualBall> ball;
  /// When the norm vanishes: whether every non-zero class is fibered.
  bool point_marked = false;
};

/// Unit ball of the norm; faces[i].marked flags a fibered face, whose open
/// cone is exactly the set of fibered covectors pairing with faces[i].paired.
UnitBall unit_ball(const NormReport& report);
UnitBall unit_ball(const Presentation& p);

}  // namespace foxnorm
