#include "foxnorm/equivalence.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>
#include <unordered_map>

namespace foxnorm {

namespace {

// Hard ceiling on states per side so that a large depth cannot exhaust memory.
constexpr std::size_t kMaxStatesPerSide = 400'000;

Word rotate(const Word& w, std::size_t k) {
  return concat(w.subword(k, w.size() - k), w.prefix(k));
}

/// Shortest t with w = t^m.
Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return w.prefix(d);
  }
  return w;
}

Word word_power(const Word& w, int k) {
  Word base = k < 0 ? invert(w) : w;
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

/// Conjugacy-invariant fingerprint of an element under f -> g f h: the
/// coefficients and, for each ordered pair of terms, the conjugacy class of
/// t_i^-1 t_j. Equal fingerprints are necessary for a solution.
std::string fingerprint(const RingElt& f) {
  std::vector<std::pair<Word, std::int64_t>> terms(f.terms().begin(), f.terms().end());
  std::vector<std::int64_t> coeffs;
  for (const auto& t : terms) coeffs.push_back(t.second);
  std::sort(coeffs.begin(), coeffs.end());

  std::vector<std::string> pairs;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Word inv = invert(terms[i].first);
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (i == j) continue;
      std::string s = std::to_string(terms[i].second) + "," + std::to_string(terms[j].second) + ":";
      for (Letter l : least_rotation(inv * terms[j].first)) s += static_cast<char>('a' + l.code());
      pairs.push_back(std::move(s));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  std::string key;
  for (auto c : coeffs) key += std::to_string(c) + ";";
  key += "|";
  for (const auto& s : pairs) key += s + "|";
  return key;
}

struct State {
  RingElt elt;
  std::vector<Rewrite> history;
  std::string key;
};

/// Distinct cyclic permutations of r and r^-1.
std::vector<Word> relator_rotations(const Word& relator) {
  std::set<Word> rots;
  for (const auto& w : cyclic_permutations(relator)) rots.insert(w);
  for (const auto& w : cyclic_permutations(invert(relator))) rots.insert(w);
  return {rots.begin(), rots.end()};
}

class SideSearch {
 public:
  SideSearch(const RingElt& start, Rewrite::Side side, const std::vector<Word>& rotations)
      : side_(side), rotations_(rotations) {
    for (std::size_t i = 0; i < rotations_.size(); ++i) by_first_[rotations_[i].front().code()].push_back(i);
    levels_.push_back({State{start, {}, fingerprint(start)}});
    visited_.insert(start);
  }

  /// States reachable with exactly `k` rewrites (first time seen), or null
  /// when generation was cut off.
  const std::vector<State>* level(std::size_t k) {
    while (levels_.size() <= k && !truncated_) expand();
    return k < levels_.size() ? &levels_[k] : nullptr;
  }

  bool truncated() const { return truncated_; }

 private:
  void expand() {
    std::vector<State> next;
    for (const State& s : levels_.back()) {
      for (const auto& [term, coeff] : s.elt.terms()) {
        for (std::size_t pos = 0; pos < term.size(); ++pos) {
          for (std::size_t ri : by_first_[term[pos].code()]) {
            const Word& rho = rotations_[ri];
            std::size_t lcp = 0;
            while (lcp < rho.size() && pos + lcp < term.size() && term[pos + lcp] == rho[lcp]) ++lcp;
            for (std::size_t len = 1; len <= lcp; ++len) {
              Rewrite rw{side_, term, pos, rho.prefix(len), invert(rho.subword(len, rho.size() - len))};
              const Word replaced =
                  concat(concat(term.prefix(pos), rw.inserted), term.subword(pos + len, term.size() - pos - len));
              RingElt elt = s.elt;
              elt.add_term(term, -coeff);
              elt.add_term(replaced, coeff);
              if (!visited_.insert(elt).second) continue;
              State ns{std::move(elt), s.history, {}};
              ns.history.push_back(std::move(rw));
              ns.key = fingerprint(ns.elt);
              next.push_back(std::move(ns));
              if (visited_.size() > kMaxStatesPerSide) {
                truncated_ = true;
                return;
              }
            }
          }
        }
      }
    }
    levels_.push_back(std::move(next));
  }

  Rewrite::Side side_;
  const std::vector<Word>& rotations_;
  std::array<std::vector<std::size_t>, 4> by_first_;
  std::vector<std::vector<State>> levels_;
  std::set<RingElt> visited_;
  bool truncated_ = false;
};

}  // namespace

std::optional<Word> conjugator(const Word& a, const Word& b) {
  const CyclicReduction ca = cyclic_reduce(a);
  const CyclicReduction cb = cyclic_reduce(b);
  if (ca.core.size() != cb.core.size()) return std::nullopt;
  if (ca.core.empty()) return Word{};
  for (std::size_t k = 0; k < ca.core.size(); ++k) {
    if (rotate(ca.core, k) == cb.core) {
      // b' = u^-1 a' u with u = a'[0, k), so h = c_a u c_b^-1.
      return ca.conjugator * ca.core.prefix(k) * invert(cb.conjugator);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Word, Word>> solve_translate(const RingElt& p, const RingElt& q) {
  if (p.size() != q.size() || p.is_zero()) return std::nullopt;
  auto check = [&](const Word& g, const Word& h) { return left_multiply(g, right_multiply(q, h)) == p; };

  auto pit = p.terms().begin();
  const auto& [p1, c1] = *pit;
  if (p.size() == 1) {
    const auto& [q1, d1] = *q.terms().begin();
    if (d1 != c1) return std::nullopt;
    return std::pair{p1 * invert(q1), Word{}};
  }
  const auto& [p2, c2] = *std::next(pit);
  const Word target = invert(p1) * p2;
  for (const auto& [qi, di] : q.terms()) {
    if (di != c1) continue;
    for (const auto& [qj, dj] : q.terms()) {
      if (dj != c2 || qj == qi) continue;
      const Word a = invert(qi) * qj;
      const auto h0 = conjugator(a, target);
      if (!h0) continue;
      // Every solution is root^k * h0 with root generating the centralizer of a.
      const CyclicReduction ca = cyclic_reduce(a);
      const Word root = ca.conjugator * primitive_root(ca.core) * invert(ca.conjugator);
      for (int k : {0, 1, -1, 2, -2, 3, -3}) {
        const Word h = word_power(root, k) * *h0;
        const Word g = p1 * invert(h) * invert(qi);
        if (check(g, h)) return std::pair{g, h};
      }
    }
  }
  return std::nullopt;
}

std::optional<RingElt> apply_rewrite(const RingElt& f, const Rewrite& rw, const Word& relator) {
  const std::int64_t c = f.coefficient(rw.term);
  if (c == 0 || !rw.term.is_reduced()) return std::nullopt;
  if (rw.removed.empty() || rw.position + rw.removed.size() > rw.term.size()) return std::nullopt;
  if (rw.term.subword(rw.position, rw.removed.size()) != rw.removed) return std::nullopt;
  const Word cycle = concat(rw.removed, invert(rw.inserted));
  if (cycle.size() != relator.size()) return std::nullopt;
  bool justified = false;
  for (const Word& base : {relator, invert(relator)}) {
    for (const auto& rot : cyclic_permutations(base)) justified = justified || rot == cycle;
  }
  if (!justified) return std::nullopt;
  const Word replaced = concat(concat(rw.term.prefix(rw.position), rw.inserted),
                               rw.term.subword(rw.position + rw.removed.size(),
                                               rw.term.size() - rw.position - rw.removed.size()));
  RingElt out = f;
  out.add_term(rw.term, -c);
  out.add_term(replaced, c);
  return out;
}

bool validate_certificate(const RingElt& p, const RingElt& q, const Certificate& cert, const Word& relator) {
  RingElt lhs = p;
  RingElt rhs = q;
  for (const auto& rw : cert.rewrites) {
    RingElt& target = rw.side == Rewrite::Side::P ? lhs : rhs;
    auto next = apply_rewrite(target, rw, relator);
    if (!next) return false;
    target = std::move(*next);
  }
  return left_multiply(cert.left, right_multiply(rhs, cert.right)) == lhs;
}

EquivalenceVerdict equiv_monomial_translate(const RingElt& p, const RingElt& q, int depth, const Word& relator,
                                            int min_rewrites) {
  EquivalenceVerdict verdict;
  if (p.is_zero() || q.is_zero() || depth < 0) return verdict;
  const std::vector<Word> rotations = relator_rotations(relator);
  SideSearch ps(p, Rewrite::Side::P, rotations);
  SideSearch qs(q, Rewrite::Side::Q, rotations);
  const std::size_t cap = (static_cast<std::size_t>(depth) + 1) / 2;

  for (std::size_t total = static_cast<std::size_t>(std::max(min_rewrites, 0));
       total <= static_cast<std::size_t>(depth); ++total) {
    for (std::size_t i = 0; i <= std::min(total, cap); ++i) {
      const std::size_t j = total - i;
      if (j > cap) continue;
      const std::vector<State>* pl = ps.level(i);
      const std::vector<State>* ql = qs.level(j);
      if (!pl || !ql) continue;
      std::unordered_map<std::string, std::vector<const State*>> index;
      for (const State& s : *ql) index[s.key].push_back(&s);
      for (const State& sp : *pl) {
        auto it = index.find(sp.key);
        if (it == index.end()) continue;
        for (const State* sq : it->second) {
          ++verdict.states_examined;
          auto sol = solve_translate(sp.elt, sq->elt);
          if (!sol) continue;
          Certificate cert{sol->first, sol->second, sp.history};
          cert.rewrites.insert(cert.rewrites.end(), sq->history.begin(), sq->history.end());
          if (!validate_certificate(p, q, cert, relator)) continue;
          verdict.verified = true;
          verdict.certificate = std::move(cert);
          return verdict;
        }
      }
    }
  }
  verdict.truncated = ps.truncated() || qs.truncated();
  return verdict;
}

}  // namespace foxnorm
