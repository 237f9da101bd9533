#include "discdeg/multi_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "discdeg/errors.hpp"

namespace discdeg {

namespace {

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check_same_vars(std::size_t a, std::size_t b) {
  if (a != b)
    throw std::invalid_argument("MultiPoly: variable count mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("MultiPoly: variable index");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e));
}

MultiPoly MultiPoly::monomial(Exponents exps, const Rational& c) {
  MultiPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

MultiPoly MultiPoly::linear(std::span<const Rational> coeffs, const Rational& constant) {
  MultiPoly p(coeffs.size());
  Exponents e(coeffs.size(), 0);
  p.add_term(e, constant);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    e[i] = 1;
    p.add_term(e, coeffs[i]);
    e[i] = 0;
  }
  return p;
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> MultiPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return degree_of(terms_.rbegin()->first);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return degree_of(terms_.begin()->first) == degree_of(terms_.rbegin()->first);
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  check_same_vars(exps.size(), nvars_);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  check_same_vars(point.size(), nvars_);
  // powers cached per variable
  std::vector<std::vector<Rational>> powers(nvars_);
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const int k = e[i];
      if (k == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Rational(1));
      while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * point[i]);
      term *= pw[static_cast<std::size_t>(k)];
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::permuted(std::span<const std::size_t> perm) const {
  check_same_vars(perm.size(), nvars_);
  MultiPoly out(nvars_);
  Exponents e2(nvars_);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) e2[perm[i]] = e[i];
    out.terms_.emplace(e2, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  check_same_vars(images.size(), nvars_);
  const std::size_t out_vars = images.empty() ? 0 : images[0].nvars();
  for (const auto& img : images) check_same_vars(img.nvars(), out_vars);
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  MultiPoly out(out_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(out_vars, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      const int k = e[i];
      if (k == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(out_vars, 1));
      while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[i]);
      term = term * pw[static_cast<std::size_t>(k)];
    }
    out += term;
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_same_vars(nvars_, other.nvars_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_same_vars(nvars_, other.nvars_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_same_vars(a.nvars_, b.nvars_);
  MultiPoly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw std::invalid_argument("MultiPoly: name count mismatch");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant_term = degree_of(e) == 0;
    if (mag != Rational(1) || constant_term) {
      os << mag;
      if (!mag.is_integer() && !constant_term) os << "*";
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::string MultiPoly::to_string() const { return to_string(default_names(nvars_)); }

std::vector<std::string> default_names(std::size_t n, const std::string& stem) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den) {
  check_same_vars(num.nvars(), den.nvars());
  if (den.is_zero()) throw std::domain_error("MultiPoly: division by zero polynomial");
  const auto& [lead_exp, lead_coeff] = *den.terms().rbegin();
  MultiPoly rem = num;
  MultiPoly quot(num.nvars());
  Exponents shift(num.nvars());
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = re[i] - lead_exp[i];
      if (shift[i] < 0)
        throw NonExactDivision("multivariate division: leading term not divisible");
    }
    const Rational c = rc / lead_coeff;
    quot.add_term(shift, c);
    MultiPoly step = MultiPoly::monomial(shift, c) * den;
    rem -= step;
  }
  return quot;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), nvars_(names.size()) {
    for (const auto& n : names) {
      std::string key;
      for (char ch : n)
        if (ch != '_') key.push_back(ch);
      names_.push_back(key);
    }
  }

  MultiPoly run() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char ch) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char ch = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(ch)) ||
           std::isalpha(static_cast<unsigned char>(ch)) || ch == '(';
  }

  MultiPoly expr() {
    MultiPoly acc(nvars_);
    bool negate = false;
    if (peek('-')) {
      negate = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    MultiPoly t = term();
    acc += negate ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    if (!starts_factor()) fail("expected a factor");
    MultiPoly acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  unsigned integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  MultiPoly power_suffix(MultiPoly base) {
    if (peek('^')) {
      ++pos_;
      return base.pow(integer());
    }
    return base;
  }

  MultiPoly factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return power_suffix(std::move(inner));
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return power_suffix(MultiPoly::constant(
          nvars_, Rational::from_integer_string(text_.substr(start, pos_ - start))));
    }
    const std::size_t start = pos_;
    std::string key;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      key.push_back(text_[pos_++]);
    if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      key.push_back(text_[pos_++]);
    auto it = std::find(names_.begin(), names_.end(), key);
    if (it == names_.end()) {
      pos_ = start;
      fail("unknown variable '" + key + "'");
    }
    return power_suffix(
        MultiPoly::variable(nvars_, static_cast<std::size_t>(it - names_.begin())));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  std::vector<std::string> names_;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, const std::vector<std::string>& names) {
  return PolyParser(text, names).run();
}

}  // namespace discdeg
