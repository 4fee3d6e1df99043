#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "foxnorm/group_ring.hpp"
#include "foxnorm/word.hpp"

namespace foxnorm {

/// Point of H_1/torsion, which is Z^2 or Z. Rank-1 points keep the second
/// coordinate at zero.
using LatticePoint = std::array<std::int64_t, 2>;

/// The canonical map psi: F -> H_1(<x,y|r>)/torsion.
struct AbelianizationMap {
  int rank = 2;
  LatticePoint image_x{1, 0};
  LatticePoint image_y{0, 1};

  LatticePoint operator()(const Word& w) const;
  LatticePoint operator()(std::int64_t x_sum, std::int64_t y_sum) const;

  friend bool operator==(const AbelianizationMap&, const AbelianizationMap&) = default;
};

/// A <x, y | r> with r non-empty and cyclically reduced.
class Presentation {
 public:
  /// Throws EmptyRelator or NotCyclicallyReduced.
  explicit Presentation(Word relator);

  /// Parses, freely reduces and cyclically reduces the text. Cyclic reduction
  /// replaces r by a conjugate, which presents the same group.
  static Presentation from_text(std::string_view text);

  const Word& relator() const { return relator_; }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Word relator_;
};

/// Commutative Laurent polynomial over Z in one or two variables.
class LaurentElt {
 public:
  using Terms = std::map<LatticePoint, std::int64_t>;

  explicit LaurentElt(int rank = 2) : rank_(rank) {}

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const LatticePoint& p) const;
  std::int64_t coefficient_sum() const;

  void add_term(const LatticePoint& p, std::int64_t c);

  friend LaurentElt operator+(const LaurentElt& a, const LaurentElt& b);
  friend LaurentElt operator*(const LaurentElt& a, const LaurentElt& b);
  friend bool operator==(const LaurentElt&, const LaurentElt&) = default;

 private:
  int rank_;
  Terms terms_;
};

struct ExponentSums {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const ExponentSums&, const ExponentSums&) = default;
};

ExponentSums exponent_sums(const Word& r);
int betti(const Presentation& p);
AbelianizationMap psi(const Presentation& p);
LaurentElt laurent_image(const RingElt& f, const AbelianizationMap& map);

/// The v-component of f: the terms whose words map to v.
RingElt component(const RingElt& f, const LatticePoint& v, const AbelianizationMap& map);
/// All non-zero components, keyed by lattice point.
std::map<LatticePoint, RingElt> components(const RingElt& f, const AbelianizationMap& map);

/// b1 = 1, x generates H_1/torsion and y dies there.
bool is_simple(const Presentation& p);

/// Elementary Nielsen automorphism of F(x, y). The two multiplication moves
/// carry a power k standing for k repetitions of x -> x y^+-1 (resp. y -> y x^+-1).
struct NielsenMove {
  enum class Kind { MultiplyXByY, MultiplyYByX, Swap, InvertX, InvertY };
  Kind kind = Kind::Swap;
  std::int64_t power = 0;

  /// Image of w under the automorphism, freely reduced.
  Word apply(const Word& w) const;
  /// Action on exponent-sum vectors: sums(apply(w)) = matrix() * sums(w).
  std::array<std::array<std::int64_t, 2>, 2> matrix() const;
  std::string to_string() const;

  friend bool operator==(const NielsenMove&, const NielsenMove&) = default;
};

struct SimpleConversion {
  Presentation presentation;
  std::vector<NielsenMove> trace;
  /// The new relator is cyclic_reduce(apply_trace(old relator)).core.
  Word apply_trace(const Word& w) const;
  /// Composite action on exponent sums.
  std::array<std::array<std::int64_t, 2>, 2> matrix() const;
};

/// Euclidean reduction of the exponent sums to (0, g) with g > 0.
/// Throws NotRankOne when b1 != 1. Simple inputs come back unchanged.
SimpleConversion to_simple(const Presentation& p);

}  // namespace foxnorm
