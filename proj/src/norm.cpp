#include "foxnorm/norm.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "foxnorm/error.hpp"
#include "foxnorm/fox.hpp"

namespace foxnorm {

std::size_t WalkTrace::multiplicity(const LatticePoint& v) const {
  return static_cast<std::size_t>(std::count(points.begin(), points.end() - 1, v));
}

WalkTrace walk_trace(const Word& r) {
  WalkTrace t;
  LatticePoint p{0, 0};
  t.points.push_back(p);
  for (Letter l : r) {
    p[l.gen == Generator::x ? 0 : 1] += l.sign;
    t.points.push_back(p);
  }
  return t;
}

MarkedPolytope polytope_via_walk(const Presentation& p) {
  if (betti(p) != 2) {
    throw Error(ErrorKind::NotRankTwo, "the walk of " + p.relator().to_string() + " does not close up");
  }
  const WalkTrace trace = walk_trace(p.relator());
  std::vector<QPoint> pts;
  for (const auto& v : trace.points) pts.push_back(QPoint::lattice(v));
  const MarkedPolytope c = hull(pts);

  std::vector<bool> walk_marked(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const QPoint& v = c.vertex(i);
    walk_marked[i] = trace.multiplicity({v.twice[0] / 2, v.twice[1] / 2}) == 1;
  }

  // Unit squares, by lower-left corner, fully inside C and cornered at a vertex of C.
  std::set<LatticePoint> squares;
  for (const auto& v : c.vertices()) {
    const std::int64_t vx = v.twice[0] / 2;
    const std::int64_t vy = v.twice[1] / 2;
    for (std::int64_t dx : {-1, 0}) {
      for (std::int64_t dy : {-1, 0}) {
        const LatticePoint ll{vx + dx, vy + dy};
        bool inside = true;
        for (std::int64_t cx : {0, 1}) {
          for (std::int64_t cy : {0, 1}) inside = inside && contains(c, QPoint::lattice({ll[0] + cx, ll[1] + cy}));
        }
        if (inside) squares.insert(ll);
      }
    }
  }
  if (squares.empty()) {
    throw Error(ErrorKind::WalkMarkingInconsistent, "no unit square of the hull touches a vertex");
  }

  std::vector<QPoint> midpoints;
  std::vector<bool> marks;
  for (const auto& ll : squares) {
    std::optional<bool> mark;
    for (std::int64_t cx : {0, 1}) {
      for (std::int64_t cy : {0, 1}) {
        const auto k = c.index_of(QPoint::lattice({ll[0] + cx, ll[1] + cy}));
        if (!k) continue;
        if (mark && *mark != walk_marked[*k]) {
          throw Error(ErrorKind::WalkMarkingInconsistent,
                      "square at " + QPoint::lattice(ll).to_string() + " has marked and unmarked hull corners");
        }
        mark = walk_marked[*k];
      }
    }
    midpoints.push_back(QPoint::halves(2 * ll[0] + 1, 2 * ll[1] + 1));
    marks.push_back(mark.value_or(false));
  }

  MarkedPolytope out = hull(midpoints);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto it = std::find(midpoints.begin(), midpoints.end(), out.vertex(i));
    out.set_marked(i, marks[static_cast<std::size_t>(it - midpoints.begin())]);
  }
  return out;
}

namespace {

MarkedPolytope difference_or_throw(const MarkedPolytope& r, const MarkedPolytope& q, const char* what) {
  auto d = minkowski_diff(r, q);
  if (!d) {
    throw Error(ErrorKind::DifferenceDoesNotExist,
                std::string(what) + ": " + r.to_string() + " - " + q.to_string() + " does not exist");
  }
  return *d;
}

}  // namespace

FoxConstruction fox_construction(const Presentation& input) {
  std::optional<SimpleConversion> conversion;
  int orientation = 1;
  Presentation p = input;
  if (betti(input) == 1 && !is_simple(input)) {
    conversion = to_simple(input);
    p = conversion->presentation;
    // psi_new . M = orientation * psi_old, where M acts on exponent sums.
    const auto m = conversion->matrix();
    const AbelianizationMap old_map = psi(input);
    const AbelianizationMap new_map = psi(p);
    const std::int64_t row0 = new_map.image_x[0] * m[0][0] + new_map.image_y[0] * m[1][0];
    const std::int64_t row1 = new_map.image_x[0] * m[0][1] + new_map.image_y[0] * m[1][1];
    orientation = (row0 == old_map.image_x[0] && row1 == old_map.image_y[0]) ? 1 : -1;
    if (row0 != orientation * old_map.image_x[0] || row1 != orientation * old_map.image_y[0]) {
      throw Error(ErrorKind::NotRankOne, "Nielsen conversion does not preserve the abelianization");
    }
  }

  const AbelianizationMap map = psi(p);
  const Word& r = p.relator();
  RingElt r_x = fox_derivative(r, Generator::x);
  RingElt r_y = fox_derivative(r, Generator::y);
  const RingElt x_minus_1 = RingElt::monomial(Word::power(Generator::x, 1)) - RingElt::one();
  const RingElt y_minus_1 = RingElt::monomial(Word::power(Generator::y, 1)) - RingElt::one();

  MarkedPolytope m_rx = r_x.is_zero() ? MarkedPolytope(map.rank, {QPoint{}}, {}) : polytope_of(r_x, map);
  if (r_y.is_zero()) {
    throw Error(ErrorKind::DifferenceDoesNotExist, "r_y vanishes for " + r.to_string());
  }
  MarkedPolytope m_ry = polytope_of(r_y, map);
  MarkedPolytope from_ry = difference_or_throw(m_ry, polytope_of(x_minus_1, map), "M(r_y) - M(x-1)");

  std::optional<MarkedPolytope> from_rx;
  if (map.rank == 2) {
    if (r_x.is_zero()) throw Error(ErrorKind::DifferenceDoesNotExist, "r_x vanishes for " + r.to_string());
    from_rx = difference_or_throw(m_rx, polytope_of(y_minus_1, map), "M(r_x) - M(y-1)");
    if (!translation_equiv(from_ry, *from_rx)) {
      throw Error(ErrorKind::FoxCrossCheckFailed,
                  "M(r_y) - M(x-1) = " + from_ry.to_string() + " but M(r_x) - M(y-1) = " + from_rx->to_string());
    }
  }
  MarkedPolytope result = orientation == 1 ? from_ry : negate(from_ry);
  return FoxConstruction{map,  std::move(conversion), orientation, std::move(r_x), std::move(r_y),
                         m_rx, m_ry, from_ry, from_rx, result};
}

MarkedPolytope polytope_via_fox(const Presentation& p) { return fox_construction(p).result; }

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Walk: return "walk";
    case Provenance::Fox: return "fox";
    case Provenance::BothAgree: return "both-agree";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Walk: return "walk";
    case Method::Fox: return "fox";
    case Method::Both: return "both";
  }
  return "?";
}

std::string to_string(FiberedVerdict::Kind k) {
  switch (k) {
    case FiberedVerdict::Kind::Fibered: return "fibered";
    case FiberedVerdict::Kind::NotFibered: return "not-fibered";
    case FiberedVerdict::Kind::IndeterminateTie: return "indeterminate-tie";
  }
  return "?";
}

NormReport compute_marked_polytope(const Presentation& p, Method method) {
  const int b1 = betti(p);
  if (method == Method::Walk) {
    return NormReport{p, b1, psi(p), polytope_via_walk(p), Provenance::Walk, std::nullopt, {}};
  }
  FoxConstruction fox = fox_construction(p);
  if (method == Method::Fox || b1 == 1) {
    return NormReport{p, b1, psi(p), fox.result, Provenance::Fox, fox.conversion, {}};
  }
  const MarkedPolytope walk = polytope_via_walk(p);
  if (!translation_equiv(walk, fox.result)) {
    throw Error(ErrorKind::FoxCrossCheckFailed,
                "walk polytope " + walk.to_string() + " differs from Fox polytope " + fox.result.to_string());
  }
  return NormReport{p, b1, psi(p), fox.result, Provenance::BothAgree, std::nullopt, {}};
}

namespace {

void require_rank(const NormReport& report, const Covector& phi) {
  if (phi.rank != report.betti) {
    throw Error(ErrorKind::RankMismatch, "covector of rank " + std::to_string(phi.rank) + " for b1 = " +
                                             std::to_string(report.betti));
  }
}

}  // namespace

Rational thurston_norm(const NormReport& report, const Covector& phi) {
  require_rank(report, phi);
  return thickness(report.polytope, phi);
}

Rational thurston_norm(const Presentation& p, const Covector& phi) {
  return thurston_norm(compute_marked_polytope(p, Method::Fox), phi);
}

FiberedVerdict fibered(const NormReport& report, const Covector& phi) {
  require_rank(report, phi);
  if (phi.is_zero()) return {FiberedVerdict::Kind::IndeterminateTie, std::nullopt};
  const auto i = pairs_maximally(report.polytope, phi);
  if (!i) return {FiberedVerdict::Kind::IndeterminateTie, std::nullopt};
  return {report.polytope.is_marked(*i) ? FiberedVerdict::Kind::Fibered : FiberedVerdict::Kind::NotFibered,
          report.polytope.vertex(*i)};
}

FiberedVerdict fibered(const Presentation& p, const Covector& phi) {
  return fibered(compute_marked_polytope(p, Method::Fox), phi);
}

const NormQuery& NormReport::query(const Covector& phi) {
  queries.push_back({phi, thurston_norm(*this, phi), fibered(*this, phi)});
  return queries.back();
}

UnitBall unit_ball(const NormReport& report) {
  if (report.polytope.size() == 1) return {std::nullopt, report.polytope.is_marked(0)};
  return {dual_ball(report.polytope), false};
}

UnitBall unit_ball(const Presentation& p) { return unit_ball(compute_marked_polytope(p, Method::Fox)); }

}  // namespace foxnorm
