#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "foxnorm/abelian.hpp"
#include "foxnorm/group_ring.hpp"

namespace foxnorm {

using Rational = boost::rational<std::int64_t>;

/// Point with coordinates in (1/2)Z, stored doubled. Rank-1 points leave the
/// second coordinate at zero.
struct QPoint {
  std::array<std::int64_t, 2> twice{};

  static QPoint lattice(const LatticePoint& p) { return {{2 * p[0], 2 * p[1]}}; }
  static QPoint halves(std::int64_t x2, std::int64_t y2 = 0) { return {{x2, y2}}; }

  Rational coord(int i) const { return Rational(twice[static_cast<std::size_t>(i)], 2); }
  bool is_lattice() const { return twice[0] % 2 == 0 && twice[1] % 2 == 0; }

  friend QPoint operator+(QPoint a, QPoint b) { return {{a.twice[0] + b.twice[0], a.twice[1] + b.twice[1]}}; }
  friend QPoint operator-(QPoint a, QPoint b) { return {{a.twice[0] - b.twice[0], a.twice[1] - b.twice[1]}}; }
  friend QPoint operator-(QPoint a) { return {{-a.twice[0], -a.twice[1]}}; }
  friend bool operator==(const QPoint&, const QPoint&) = default;
  friend auto operator<=>(const QPoint&, const QPoint&) = default;

  std::string to_string(int rank = 2) const;
};

/// Linear functional on the ambient space of a polytope.
struct Covector {
  int rank = 2;
  std::array<Rational, 2> c{};

  static Covector of(std::int64_t a, std::int64_t b) { return {2, {Rational(a), Rational(b)}}; }
  static Covector of(std::int64_t a) { return {1, {Rational(a), Rational(0)}}; }

  bool is_zero() const { return c[0].numerator() == 0 && c[1].numerator() == 0; }
  Rational operator()(const QPoint& p) const;
  Covector operator-() const { return {rank, {-c[0], -c[1]}}; }
  friend Covector operator*(Rational k, const Covector& v) { return {v.rank, {k * v.c[0], k * v.c[1]}}; }
  friend Covector operator+(const Covector& a, const Covector& b) {
    return {a.rank, {a.c[0] + b.c[0], a.c[1] + b.c[1]}};
  }
  friend bool operator==(const Covector&, const Covector&) = default;
};

/// Convex polytope of dimension <= 2 with vertices in (1/2)Z^rank and a set
/// of marked vertices.
///
/// Vertices are the minimal spanning set in canonical order: counter-clockwise
/// from the lexicographic minimum in rank 2, ascending in rank 1. Points and
/// segments are allowed.
class MarkedPolytope {
 public:
  /// Takes vertices already in canonical order; use hull() otherwise.
  MarkedPolytope(int rank, std::vector<QPoint> vertices, std::vector<bool> marked);

  int rank() const { return rank_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<QPoint>& vertices() const { return vertices_; }
  const QPoint& vertex(std::size_t i) const { return vertices_[i]; }
  bool is_marked(std::size_t i) const { return marked_[i]; }
  const std::vector<bool>& marks() const { return marked_; }
  std::vector<std::size_t> marked_indices() const;
  std::optional<std::size_t> index_of(const QPoint& p) const;

  /// 0 for a point, 1 for a segment, 2 for a polygon.
  int dimension() const;

  void set_marked(std::size_t i, bool value) { marked_[i] = value; }
  MarkedPolytope unmarked() const;
  MarkedPolytope all_marked() const;

  friend bool operator==(const MarkedPolytope&, const MarkedPolytope&) = default;

  std::string to_string() const;

 private:
  int rank_;
  std::vector<QPoint> vertices_;
  std::vector<bool> marked_;
};

/// Convex hull, unmarked. Throws EmptyInput.
MarkedPolytope hull(std::span<const QPoint> points, int rank = 2);

/// Marked Newton polytope of a Laurent polynomial: v is marked iff its
/// coefficient is +-1. Throws ZeroElement.
MarkedPolytope polytope_of(const LaurentElt& f);

/// Marked polytope of a group-ring element: hull of psi(support), with vertex
/// v marked iff the v-component of f is a monomial in Z[F].
///
/// The monomial test runs in the free group. For Fox derivatives of a
/// cyclically reduced relator the summands are distinct in the one-relator
/// group as well, so this agrees with the test in Z[pi]. Throws ZeroElement.
MarkedPolytope polytope_of(const RingElt& f, const AbelianizationMap& map);

MarkedPolytope translate(const MarkedPolytope& p, QPoint t);
MarkedPolytope negate(const MarkedPolytope& p);
/// k-fold dilation about the origin, k >= 0.
MarkedPolytope scale(const MarkedPolytope& p, std::int64_t k);

bool contains(const MarkedPolytope& p, const QPoint& q);

/// Support function h_P(n) = max <n, v> in doubled units, n integral.
std::int64_t support(const MarkedPolytope& p, const std::array<std::int64_t, 2>& n);

/// Marked Minkowski sum: u is marked iff u = v + w with v and w marked.
MarkedPolytope minkowski_sum(const MarkedPolytope& m, const MarkedPolytope& n);

/// The polytope P with P + Q = R, if it exists.
///
/// P = {p : p + Q in R} is cut out by the half-planes <n, p> <= h_R(n) - h_Q(n)
/// over the facet normals n of R; every vertex of P is a difference of
/// vertices of R and Q. The result is returned only when P + Q reproduces R
/// exactly. A vertex u of P is marked iff u + w is a marked vertex of R for the
/// marked vertices w of Q with u + w a vertex of R. Throws
/// InconsistentMarkings when no marking of P reproduces the marks of R.
std::optional<MarkedPolytope> minkowski_diff(const MarkedPolytope& r, const MarkedPolytope& q);

/// max phi - min phi over the vertices.
Rational thickness(const MarkedPolytope& p, const Covector& phi);

/// (1/2)(P + (-P)), unmarked. Throws NotHalfIntegral when the result leaves
/// (1/2)Z^rank, i.e. when vertex differences are not integral.
MarkedPolytope symmetrize(const MarkedPolytope& p);

/// P = Q + t for some t, marks included.
bool translation_equiv(const MarkedPolytope& p, const MarkedPolytope& q);

/// The unique vertex at which phi is strictly maximal, or nothing on a tie.
std::optional<std::size_t> pairs_maximally(const MarkedPolytope& p, const Covector& phi);

/// One face of the ball {phi : th_P(phi) <= 1}. The face lies on the line
/// phi(normal) = 1, where normal = paired - opposite is a vertex of P - P.
/// Covectors in the open cone over the face pair maximally with `paired`.
struct BallFace {
  QPoint normal;
  QPoint paired;
  QPoint opposite;
  bool marked = false;
};

/// The unit ball of the thickness seminorm of a polytope.
///
/// Bounded rank-2 balls list vertices counter-clockwise and faces[i] joins
/// vertices[i] and vertices[(i + 1) % n]. A rank-1 ball is the interval
/// [vertices[0], vertices[1]] with faces at its two ends. A strip (P a
/// segment in rank 2) has faces but no vertices.
struct DualBall {
  enum class Kind { Bounded, Strip };
  int rank = 2;
  Kind kind = Kind::Bounded;
  std::vector<std::array<Rational, 2>> vertices;
  std::vector<BallFace> faces;

  /// The gauge of the ball, i.e. the thickness seminorm it came from.
  Rational gauge(const Covector& phi) const;
};

/// Unit ball of phi -> th_P(phi): the dual of P - P, which is the dual of
/// 2P for a centrally symmetric P. Throws DegenerateEverywhere for a point.
DualBall dual_ball(const MarkedPolytope& p);

}  // namespace foxnorm
