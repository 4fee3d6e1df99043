#include "foxnorm/group_ring.hpp"

#include <cctype>
#include <cstdlib>

#include "foxnorm/error.hpp"

namespace foxnorm {

RingElt::RingElt(const Terms& raw) {
  for (const auto& [w, c] : raw) add_term(w, c);
}

RingElt RingElt::monomial(const Word& w, std::int64_t coefficient) {
  RingElt r;
  r.add_term(w, coefficient);
  return r;
}

RingElt RingElt::parse(std::string_view text) {
  RingElt out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size() || text.substr(i) == "0") return out;
  int sign = 1;
  bool first = true;
  while (i < text.size()) {
    skip();
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw Error(ErrorKind::UnknownCharacter, "expected '+' or '-' at offset " + std::to_string(i));
    }
    first = false;
    std::int64_t coeff = 0;
    bool has_coeff = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = coeff * 10 + (text[i] - '0');
      has_coeff = true;
      ++i;
    }
    if (!has_coeff) coeff = 1;
    skip();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    const std::size_t start = i;
    while (i < text.size() && text[i] != '+' && text[i] != '-') {
      // A '-' directly after '^' belongs to the exponent.
      if (text[i] == '^' && i + 1 < text.size() && text[i + 1] == '-') ++i;
      ++i;
    }
    std::string_view body = text.substr(start, i - start);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    Word w;
    if (body.empty() || body == "1") {
      if (body.empty() && !has_coeff) {
        throw Error(ErrorKind::UnknownCharacter, "empty term at offset " + std::to_string(start));
      }
    } else {
      w = parse_word(body);
    }
    out.add_term(w, sign * coeff);
  }
  return out;
}

std::int64_t RingElt::coefficient(const Word& w) const {
  auto it = terms_.find(free_reduce(w));
  return it == terms_.end() ? 0 : it->second;
}

void RingElt::add_term(const Word& w, std::int64_t c) {
  if (c == 0) return;
  Word key = w.is_reduced() ? w : free_reduce(w);
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElt& RingElt::operator+=(const RingElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

RingElt& RingElt::operator-=(const RingElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

RingElt operator-(const RingElt& a) {
  RingElt out = a;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

RingElt operator*(const RingElt& a, const RingElt& b) {
  RingElt out;
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) out.add_term(u * v, cu * cv);
  }
  return out;
}

RingElt operator*(std::int64_t c, const RingElt& a) {
  RingElt out;
  for (const auto& [w, cw] : a.terms_) out.add_term(w, c * cw);
  return out;
}

std::string RingElt::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (c < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    const std::int64_t mag = std::llabs(c);
    if (w.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += w.to_string();
    }
    first = false;
  }
  return out;
}

RingElt left_multiply(const Word& g, const RingElt& f) {
  RingElt out;
  for (const auto& [w, c] : f.terms()) out.add_term(g * w, c);
  return out;
}

RingElt right_multiply(const RingElt& f, const Word& h) {
  RingElt out;
  for (const auto& [w, c] : f.terms()) out.add_term(w * h, c);
  return out;
}

RingElt involution(const RingElt& f) {
  RingElt out;
  for (const auto& [w, c] : f.terms()) out.add_term(invert(w), c);
  return out;
}

bool is_monomial(const RingElt& f) {
  return f.size() == 1 && std::llabs(f.terms().begin()->second) == 1;
}

}  // namespace foxnorm
