#include "foxnorm/fox.hpp"

namespace foxnorm {

std::vector<FoxSummand> fox_summands(const Word& w, Generator g) {
  std::vector<FoxSummand> out;
  std::vector<Letter> prefix;
  prefix.reserve(w.size());
  for (Letter l : w) {
    if (l.gen == g && l.sign > 0) out.push_back({Word(prefix), +1});
    prefix.push_back(l);
    if (l.gen == g && l.sign < 0) out.push_back({Word(prefix), -1});
  }
  return out;
}

RingElt fox_derivative(const Word& w, Generator g) {
  RingElt out;
  for (const auto& s : fox_summands(w, g)) out.add_term(s.prefix, s.sign);
  return out;
}

}  // namespace foxnorm
