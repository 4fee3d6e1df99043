#pragma once

#include "foxnorm/group_ring.hpp"
#include "foxnorm/word.hpp"

namespace foxnorm {

/// Fox derivative of w with respect to generator g, in merged normal form.
///
/// Letter i of w contributes +w[0..i) when it is g and -w[0..i] when it is
/// g^-1. For a reduced w the prefixes are pairwise distinct reduced words, so
/// no two contributions merge.
RingElt fox_derivative(const Word& w, Generator g);

/// The summands of fox_derivative(w, g) before merging, in letter order.
struct FoxSummand {
  Word prefix;
  int sign;
};
std::vector<FoxSummand> fox_summands(const Word& w, Generator g);

}  // namespace foxnorm
