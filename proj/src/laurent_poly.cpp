#include "discdeg/laurent_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace discdeg {

LaurentPoly::LaurentPoly(const MultiPoly& p) : nvars_(p.nvars()) {
  for (const auto& [e, c] : p.terms()) terms_.emplace(e, c);
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponents exps, const Rational& c) {
  LaurentPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

void LaurentPoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != nvars_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational LaurentPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

LaurentPoly LaurentPoly::conjugate() const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    out.terms_.emplace(std::move(neg), c);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
  LaurentPoly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) os << "*L" << (i + 1) << "^" << e[i];
  }
  return os.str();
}

Rational constant_term_of_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("LaurentPoly: variable count mismatch");
  const LaurentPoly& small = a.terms().size() <= b.terms().size() ? a : b;
  const LaurentPoly& large = &small == &a ? b : a;
  Rational acc(0);
  Exponents neg(a.nvars());
  for (const auto& [e, c] : small.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    auto it = large.terms().find(neg);
    if (it != large.terms().end()) acc += c * it->second;
  }
  return acc;
}

}  // namespace discdeg
