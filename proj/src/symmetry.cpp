#include "foxnorm/symmetry.hpp"

#include <algorithm>
#include <map>

#include "foxnorm/error.hpp"
#include "foxnorm/fox.hpp"

namespace foxnorm {

namespace {

using Vec = std::array<std::int64_t, 2>;

std::int64_t cross(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }
std::int64_t dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1]; }

bool upper_half(const Vec& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); }

bool angle_less(const Vec& a, const Vec& b) {
  const bool ua = upper_half(a);
  const bool ub = upper_half(b);
  if (ua != ub) return ua;
  return cross(a, b) > 0;
}

void add_edge_rays(const MarkedPolytope& p, std::vector<Vec>& rays) {
  const auto& v = p.vertices();
  if (v.size() < 2) return;
  const std::size_t edges = v.size() == 2 ? 1 : v.size();
  for (std::size_t i = 0; i < edges; ++i) {
    const QPoint e = v[(i + 1) % v.size()] - v[i];
    rays.push_back({-e.twice[1], e.twice[0]});
    rays.push_back({e.twice[1], -e.twice[0]});
  }
}

std::size_t extreme_vertex(const MarkedPolytope& p, const Vec& dir, bool maximize) {
  std::size_t best = 0;
  std::int64_t best_value = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::int64_t x = dot(dir, p.vertex(i).twice) * (maximize ? 1 : -1);
    if (i == 0 || x > best_value) {
      best = i;
      best_value = x;
    }
  }
  return best;
}

}  // namespace

bool OppositePairing::all_unique() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const OppositePair& p) { return p.v_unique && p.w_unique; });
}

OppositePairing opposite_pairs(const MarkedPolytope& a, const MarkedPolytope& b) {
  if (a.rank() != 2 || b.rank() != 2) throw Error(ErrorKind::NotRankTwo, "opposite vertices need rank 2");
  std::vector<Vec> rays;
  add_edge_rays(a, rays);
  add_edge_rays(b, rays);
  std::sort(rays.begin(), rays.end(), angle_less);
  rays.erase(std::unique(rays.begin(), rays.end(),
                         [](const Vec& x, const Vec& y) { return cross(x, y) == 0 && dot(x, y) > 0; }),
             rays.end());

  // One generic direction per open sector of the common fan.
  std::vector<Vec> directions;
  if (rays.empty()) {
    directions.push_back({1, 0});
  } else if (rays.size() == 2) {
    directions.push_back({-rays[0][1], rays[0][0]});
    directions.push_back({rays[0][1], -rays[0][0]});
  } else {
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const Vec& r = rays[i];
      const Vec& s = rays[(i + 1) % rays.size()];
      directions.push_back({r[0] + s[0], r[1] + s[1]});
    }
  }

  OppositePairing out;
  std::map<std::pair<std::size_t, std::size_t>, Vec> seen;
  for (const auto& dir : directions) {
    const auto key = std::pair{extreme_vertex(a, dir, true), extreme_vertex(b, dir, false)};
    seen.try_emplace(key, dir);
  }
  std::map<std::size_t, int> v_count;
  std::map<std::size_t, int> w_count;
  for (const auto& [key, dir] : seen) {
    ++v_count[key.first];
    ++w_count[key.second];
  }
  for (const auto& [key, dir] : seen) {
    out.pairs.push_back({a.vertex(key.first), b.vertex(key.second), Covector::of(dir[0], dir[1]),
                         v_count[key.first] == 1, w_count[key.second] == 1});
  }
  return out;
}

SymmetryPairings opposite_pairs(const Presentation& p) {
  if (betti(p) != 2) throw Error(ErrorKind::NotRankTwo, "b1 = 1 for " + p.relator().to_string());
  const AbelianizationMap map = psi(p);
  MarkedPolytope p_rx = polytope_of(fox_derivative(p.relator(), Generator::x), map);
  MarkedPolytope p_ry = polytope_of(fox_derivative(p.relator(), Generator::y), map);
  OppositePairing cross = opposite_pairs(p_rx, p_ry);
  OppositePairing within = opposite_pairs(p_rx, p_rx);
  return {std::move(p_rx), std::move(p_ry), std::move(cross), std::move(within)};
}

std::string to_string(SymmetryReading r) {
  switch (r) {
    case SymmetryReading::Verbatim: return "verbatim";
    case SymmetryReading::Transposed: return "transposed";
    case SymmetryReading::WithinRx: return "within-r_x";
  }
  return "?";
}

std::string to_string(PairCheck::Outcome o) {
  switch (o) {
    case PairCheck::Outcome::Verified: return "verified";
    case PairCheck::Outcome::Unresolved: return "unresolved";
    case PairCheck::Outcome::ZeroComponent: return "zero-component";
  }
  return "?";
}

SymmetryReport check_conjecture(const Presentation& p, const SymmetryOptions& options) {
  SymmetryPairings pairings = opposite_pairs(p);
  const AbelianizationMap map = psi(p);
  const RingElt r_x = fox_derivative(p.relator(), Generator::x);
  const RingElt r_y = fox_derivative(p.relator(), Generator::y);
  auto comp = [&](const RingElt& f, const QPoint& v) {
    return component(f, {v.twice[0] / 2, v.twice[1] / 2}, map);
  };

  std::vector<int> signs;
  if (options.boundary_components) {
    signs.push_back(*options.boundary_components % 2 == 1 ? 1 : -1);
  } else {
    signs = {1, -1};
  }

  SymmetryReport report{p, pairings, options, {}};
  auto run = [&](SymmetryReading reading, const OppositePair& pair, const RingElt& lhs, const RingElt& base) {
    for (int sign : signs) {
      PairCheck check;
      check.reading = reading;
      check.v = pair.v;
      check.w = pair.w;
      check.sign = sign;
      check.lhs = lhs;
      check.rhs = sign * involution(base);
      if (lhs.is_zero() || base.is_zero()) {
        check.outcome = PairCheck::Outcome::ZeroComponent;
      } else {
        const EquivalenceVerdict verdict = equiv_monomial_translate(check.lhs, check.rhs, options.depth, p.relator(),
                                                                        options.min_rewrites);
        check.outcome = verdict.verified ? PairCheck::Outcome::Verified : PairCheck::Outcome::Unresolved;
        check.certificate = verdict.certificate;
        check.truncated = verdict.truncated;
      }
      report.checks.push_back(std::move(check));
    }
  };

  for (const auto& pair : pairings.cross.pairs) {
    run(SymmetryReading::Verbatim, pair, comp(r_y, pair.v), comp(r_x, pair.w));
    run(SymmetryReading::Transposed, pair, comp(r_x, pair.v), comp(r_y, pair.w));
  }
  if (options.include_within) {
    for (const auto& pair : pairings.within_rx.pairs) {
      run(SymmetryReading::WithinRx, pair, comp(r_x, pair.v), comp(r_x, pair.w));
    }
  }
  return report;
}

}  // namespace foxnorm
