#include "foxnorm/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "foxnorm/error.hpp"

namespace foxnorm {

namespace {

using Vec = std::array<std::int64_t, 2>;

std::int64_t cross(const QPoint& o, const QPoint& a, const QPoint& b) {
  return (a.twice[0] - o.twice[0]) * (b.twice[1] - o.twice[1]) -
         (a.twice[1] - o.twice[1]) * (b.twice[0] - o.twice[0]);
}

std::int64_t dot(const Vec& n, const QPoint& p) { return n[0] * p.twice[0] + n[1] * p.twice[1]; }

std::string rational_string(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void require_same_rank(const MarkedPolytope& a, const MarkedPolytope& b, const char* what) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorKind::RankMismatch, std::string(what) + ": rank " + std::to_string(a.rank()) +
                                             " vs " + std::to_string(b.rank()));
  }
}

/// Outward normals whose half-planes cut out p, degenerate cases included.
std::vector<Vec> facet_normals(const MarkedPolytope& p) {
  if (p.rank() == 1) return {{1, 0}, {-1, 0}};
  const auto& v = p.vertices();
  if (v.size() == 1) return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  if (v.size() == 2) {
    const QPoint d = v[1] - v[0];
    return {{d.twice[1], -d.twice[0]}, {-d.twice[1], d.twice[0]}, d.twice, {-d.twice[0], -d.twice[1]}};
  }
  std::vector<Vec> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const QPoint e = v[(i + 1) % v.size()] - v[i];
    out.push_back({e.twice[1], -e.twice[0]});
  }
  return out;
}

}  // namespace

std::string QPoint::to_string(int rank) const {
  std::string s = "(" + rational_string(coord(0));
  if (rank == 2) s += "," + rational_string(coord(1));
  return s + ")";
}

Rational Covector::operator()(const QPoint& p) const {
  return (c[0] * p.twice[0] + c[1] * p.twice[1]) / 2;
}

MarkedPolytope::MarkedPolytope(int rank, std::vector<QPoint> vertices, std::vector<bool> marked)
    : rank_(rank), vertices_(std::move(vertices)), marked_(std::move(marked)) {
  if (rank_ != 1 && rank_ != 2) throw Error(ErrorKind::RankMismatch, "rank must be 1 or 2");
  if (vertices_.empty()) throw Error(ErrorKind::EmptyInput, "polytope without vertices");
  if (marked_.size() != vertices_.size()) marked_.resize(vertices_.size(), false);
}

std::vector<std::size_t> MarkedPolytope::marked_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < marked_.size(); ++i) {
    if (marked_[i]) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> MarkedPolytope::index_of(const QPoint& p) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

int MarkedPolytope::dimension() const {
  return vertices_.size() >= 3 ? 2 : static_cast<int>(vertices_.size()) - 1;
}

MarkedPolytope MarkedPolytope::unmarked() const {
  return MarkedPolytope(rank_, vertices_, std::vector<bool>(vertices_.size(), false));
}

MarkedPolytope MarkedPolytope::all_marked() const {
  return MarkedPolytope(rank_, vertices_, std::vector<bool>(vertices_.size(), true));
}

std::string MarkedPolytope::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ", ";
    os << vertices_[i].to_string(rank_) << (marked_[i] ? "*" : "");
  }
  os << "]";
  return os.str();
}

MarkedPolytope hull(std::span<const QPoint> points, int rank) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "hull of no points");
  std::vector<QPoint> pts(points.begin(), points.end());
  if (rank == 1) {
    for (auto& p : pts) p.twice[1] = 0;
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    std::vector<QPoint> v{*lo};
    if (*hi != *lo) v.push_back(*hi);
    return MarkedPolytope(1, std::move(v), {});
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return MarkedPolytope(2, std::move(pts), {});

  // Andrew's monotone chain; strict turns only, so collinear points drop out.
  std::vector<QPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return MarkedPolytope(2, std::move(h), {});
}

MarkedPolytope polytope_of(const LaurentElt& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroElement, "polytope of the zero Laurent polynomial");
  std::vector<QPoint> pts;
  for (const auto& [p, c] : f.terms()) pts.push_back(QPoint::lattice(p));
  MarkedPolytope out = hull(pts, f.rank());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const QPoint& v = out.vertex(i);
    out.set_marked(i, std::llabs(f.coefficient({v.twice[0] / 2, v.twice[1] / 2})) == 1);
  }
  return out;
}

MarkedPolytope polytope_of(const RingElt& f, const AbelianizationMap& map) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroElement, "polytope of the zero group-ring element");
  const auto comps = components(f, map);
  std::vector<QPoint> pts;
  for (const auto& [p, c] : comps) pts.push_back(QPoint::lattice(p));
  MarkedPolytope out = hull(pts, map.rank);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const QPoint& v = out.vertex(i);
    out.set_marked(i, is_monomial(comps.at({v.twice[0] / 2, v.twice[1] / 2})));
  }
  return out;
}

MarkedPolytope translate(const MarkedPolytope& p, QPoint t) {
  if (p.rank() == 1) t.twice[1] = 0;
  std::vector<QPoint> v;
  for (const auto& q : p.vertices()) v.push_back(q + t);
  return MarkedPolytope(p.rank(), std::move(v), p.marks());
}

namespace {

/// Hull of pts where each hull vertex inherits the mark of the first matching
/// input point.
MarkedPolytope hull_with_marks(const std::vector<QPoint>& pts, const std::vector<bool>& marks, int rank) {
  MarkedPolytope out = hull(pts, rank);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (pts[j] == out.vertex(i)) {
        out.set_marked(i, marks[j]);
        break;
      }
    }
  }
  return out;
}

}  // namespace

MarkedPolytope negate(const MarkedPolytope& p) {
  std::vector<QPoint> v;
  for (const auto& q : p.vertices()) v.push_back(-q);
  return hull_with_marks(v, p.marks(), p.rank());
}

MarkedPolytope scale(const MarkedPolytope& p, std::int64_t k) {
  if (k < 0) throw Error(ErrorKind::RankMismatch, "negative dilation factor");
  std::vector<QPoint> v;
  for (const auto& q : p.vertices()) v.push_back(QPoint{{k * q.twice[0], k * q.twice[1]}});
  return hull_with_marks(v, p.marks(), p.rank());
}

std::int64_t support(const MarkedPolytope& p, const std::array<std::int64_t, 2>& n) {
  std::int64_t best = dot(n, p.vertex(0));
  for (const auto& v : p.vertices()) best = std::max(best, dot(n, v));
  return best;
}

bool contains(const MarkedPolytope& p, const QPoint& q) {
  QPoint probe = q;
  if (p.rank() == 1) probe.twice[1] = 0;
  for (const auto& n : facet_normals(p)) {
    if (dot(n, probe) > support(p, n)) return false;
  }
  return true;
}

MarkedPolytope minkowski_sum(const MarkedPolytope& m, const MarkedPolytope& n) {
  require_same_rank(m, n, "minkowski_sum");
  std::vector<QPoint> pts;
  for (const auto& a : m.vertices()) {
    for (const auto& b : n.vertices()) pts.push_back(a + b);
  }
  MarkedPolytope out = hull(pts, m.rank());
  // A vertex of the sum decomposes uniquely as a sum of vertices.
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool marked = false;
    for (std::size_t a = 0; a < m.size() && !marked; ++a) {
      for (std::size_t b = 0; b < n.size(); ++b) {
        if (m.vertex(a) + n.vertex(b) == out.vertex(i)) {
          marked = m.is_marked(a) && n.is_marked(b);
          break;
        }
      }
    }
    out.set_marked(i, marked);
  }
  return out;
}

std::optional<MarkedPolytope> minkowski_diff(const MarkedPolytope& r, const MarkedPolytope& q) {
  require_same_rank(r, q, "minkowski_diff");
  std::vector<std::pair<Vec, std::int64_t>> halfplanes;
  for (const auto& n : facet_normals(r)) halfplanes.emplace_back(n, support(r, n) - support(q, n));
  auto feasible = [&](const QPoint& p) {
    for (const auto& [n, bound] : halfplanes) {
      if (dot(n, p) > bound) return false;
    }
    return true;
  };

  std::set<QPoint> candidates;
  for (const auto& u : r.vertices()) {
    for (const auto& w : q.vertices()) {
      const QPoint p = u - w;
      if (feasible(p)) candidates.insert(p);
    }
  }
  if (candidates.empty()) return std::nullopt;
  std::vector<QPoint> pts(candidates.begin(), candidates.end());
  MarkedPolytope out = hull(pts, r.rank());
  if (minkowski_sum(out, q).vertices() != r.vertices()) return std::nullopt;

  for (std::size_t i = 0; i < out.size(); ++i) {
    std::optional<bool> mark;
    for (std::size_t j = 0; j < q.size(); ++j) {
      const auto k = r.index_of(out.vertex(i) + q.vertex(j));
      if (!k) continue;
      if (!q.is_marked(j)) {
        if (r.is_marked(*k)) {
          throw Error(ErrorKind::InconsistentMarkings,
                      "vertex " + r.vertex(*k).to_string(r.rank()) +
                          " is marked but is the sum with an unmarked vertex");
        }
        continue;
      }
      if (mark && *mark != r.is_marked(*k)) {
        throw Error(ErrorKind::InconsistentMarkings,
                    "vertex " + out.vertex(i).to_string(r.rank()) + " of the difference receives conflicting marks");
      }
      mark = r.is_marked(*k);
    }
    out.set_marked(i, mark.value_or(false));
  }
  return out;
}

Rational thickness(const MarkedPolytope& p, const Covector& phi) {
  Rational lo = phi(p.vertex(0));
  Rational hi = lo;
  for (const auto& v : p.vertices()) {
    const Rational x = phi(v);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return hi - lo;
}

MarkedPolytope symmetrize(const MarkedPolytope& p) {
  std::vector<QPoint> pts;
  for (const auto& a : p.vertices()) {
    for (const auto& b : p.vertices()) {
      const QPoint d = a - b;
      if (d.twice[0] % 2 != 0 || d.twice[1] % 2 != 0) {
        throw Error(ErrorKind::NotHalfIntegral, "vertex differences of " + p.to_string() + " are not integral");
      }
      pts.push_back(QPoint{{d.twice[0] / 2, d.twice[1] / 2}});
    }
  }
  return hull(pts, p.rank());
}

bool translation_equiv(const MarkedPolytope& p, const MarkedPolytope& q) {
  if (p.rank() != q.rank() || p.size() != q.size()) return false;
  const QPoint t = q.vertex(0) - p.vertex(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.vertex(i) + t != q.vertex(i) || p.is_marked(i) != q.is_marked(i)) return false;
  }
  return true;
}

std::optional<std::size_t> pairs_maximally(const MarkedPolytope& p, const Covector& phi) {
  std::optional<std::size_t> best;
  Rational best_value;
  bool tie = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational x = phi(p.vertex(i));
    if (!best || x > best_value) {
      best = i;
      best_value = x;
      tie = false;
    } else if (x == best_value) {
      tie = true;
    }
  }
  if (tie) return std::nullopt;
  return best;
}

namespace {

std::array<Rational, 2> solve_dual_vertex(const QPoint& d1, const QPoint& d2) {
  // phi(d) = 1 with d = twice / 2, i.e. <phi, twice> = 2.
  const std::int64_t det = d1.twice[0] * d2.twice[1] - d1.twice[1] * d2.twice[0];
  return {Rational(2 * (d2.twice[1] - d1.twice[1]), det), Rational(2 * (d1.twice[0] - d2.twice[0]), det)};
}

}  // namespace

DualBall dual_ball(const MarkedPolytope& p) {
  if (p.size() == 1) {
    throw Error(ErrorKind::DegenerateEverywhere, "the thickness of a point vanishes; its ball is the whole space");
  }
  // P - P is centrally symmetric; each of its vertices d = v - w comes from
  // a unique pair of vertices of P.
  std::vector<QPoint> diffs;
  for (const auto& a : p.vertices()) {
    for (const auto& b : p.vertices()) diffs.push_back(a - b);
  }
  const MarkedPolytope d = hull(diffs, p.rank());
  auto face_for = [&](const QPoint& normal) {
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (p.vertex(a) - p.vertex(b) == normal) return BallFace{normal, p.vertex(a), p.vertex(b), p.is_marked(a)};
      }
    }
    throw Error(ErrorKind::DegenerateEverywhere, "difference vertex without a decomposition");
  };

  DualBall ball;
  ball.rank = p.rank();
  if (p.rank() == 1) {
    // d = [-L, L]; the ball is |phi| <= 1/L.
    const Rational inv(2, d.vertex(1).twice[0]);
    ball.vertices = {{-inv, Rational(0)}, {inv, Rational(0)}};
    ball.faces = {face_for(d.vertex(0)), face_for(d.vertex(1))};
    return ball;
  }
  if (d.size() == 2) {
    ball.kind = DualBall::Kind::Strip;
    ball.faces = {face_for(d.vertex(0)), face_for(d.vertex(1))};
    return ball;
  }
  const std::size_t m = d.size();
  for (std::size_t i = 0; i < m; ++i) {
    ball.vertices.push_back(solve_dual_vertex(d.vertex(i), d.vertex((i + 1) % m)));
  }
  // The face with normal d_{i+1} joins vertices i and i + 1.
  for (std::size_t i = 0; i < m; ++i) ball.faces.push_back(face_for(d.vertex((i + 1) % m)));
  return ball;
}

Rational DualBall::gauge(const Covector& phi) const {
  Rational best(0);
  if (kind == Kind::Bounded && rank == 2) {
    // Recover each edge's dual normal n (n . b = 1 on the edge) from the
    // vertex list alone.
    const std::size_t m = vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
      const auto& a = vertices[i];
      const auto& b = vertices[(i + 1) % m];
      const Rational det = a[0] * b[1] - a[1] * b[0];
      const Rational nx = (b[1] - a[1]) / det;
      const Rational ny = (a[0] - b[0]) / det;
      best = std::max(best, nx * phi.c[0] + ny * phi.c[1]);
    }
    return best;
  }
  if (kind == Kind::Bounded && rank == 1) {
    const Rational half_width = vertices[1][0];
    const Rational x = phi.c[0].numerator() < 0 ? -phi.c[0] : phi.c[0];
    return x / half_width;
  }
  for (const auto& f : faces) best = std::max(best, phi(f.normal));
  return best;
}

}  // namespace foxnorm
