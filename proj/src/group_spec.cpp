#include "discdeg/group_spec.hpp"

#include <cctype>
#include <string>

#include "discdeg/errors.hpp"

namespace discdeg {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  std::size_t position() const { return pos_; }
  void advance(std::size_t n = 1) { pos_ += n; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  int integer(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    if (pos_ - start > 6) throw ParseError("number too large", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<FactorSpec> parse_group_spec(std::string_view text) {
  Cursor cur(text);
  std::vector<FactorSpec> specs;
  if (cur.done()) cur.fail("empty group specification");
  while (true) {
    cur.skip_space();
    const std::size_t start = cur.position();
    FactorSpec spec{};
    if (cur.starts_with("GL")) {
      cur.advance(2);
      spec = {FactorKind::GL, cur.integer("matrix size after GL")};
      if (spec.rank < 1) throw ParseError("GL needs size >= 1", start);
    } else {
      const char c = cur.peek();
      switch (c) {
        case 'A': spec.kind = FactorKind::A; break;
        case 'B': spec.kind = FactorKind::B; break;
        case 'C': spec.kind = FactorKind::C; break;
        case 'D': spec.kind = FactorKind::D; break;
        case 'G': spec.kind = FactorKind::G2; break;
        default: cur.fail("expected a factor type (A, B, C, D, G2 or GL)");
      }
      cur.advance();
      spec.rank = cur.integer("rank");
      if (spec.rank < 1) throw ParseError("rank must be >= 1", start);
      if (spec.kind == FactorKind::D && spec.rank < 3)
        throw ParseError("D needs rank >= 3 (write A1+A1 for D2)", start);
      if (spec.kind == FactorKind::G2 && spec.rank != 2) throw ParseError("only G2 is supported", start);
    }
    specs.push_back(spec);
    if (cur.done()) break;
    if (cur.peek() != '+' && cur.peek() != 'x' && cur.peek() != 'X')
      cur.fail("expected '+' or 'x' between factors");
    cur.advance();
  }
  return specs;
}

RootSystem parse_group(std::string_view text) { return RootSystem::build(parse_group_spec(text)); }

Weight parse_weight(const RootSystem& rs, std::string_view text) {
  Cursor cur(text);
  cur.skip_space();
  bool fundamental = false;
  if (cur.starts_with("L:")) {
    cur.advance(2);
  } else if (cur.starts_with("w:")) {
    fundamental = true;
    cur.advance(2);
  } else {
    cur.fail("weight must start with 'L:' or 'w:'");
  }
  std::vector<Rational> values;
  while (true) {
    cur.skip_space();
    const std::size_t start = cur.position();
    bool negative = false;
    if (cur.peek() == '-' || cur.peek() == '+') {
      negative = cur.peek() == '-';
      cur.advance();
    }
    const int num = cur.integer("a number");
    long long den = 1;
    if (cur.peek() == '/') {
      cur.advance();
      den = cur.integer("a denominator");
      if (den == 0) throw ParseError("zero denominator", start);
    }
    values.emplace_back(negative ? -num : num, den);
    if (cur.done()) break;
    if (cur.peek() != ',') cur.fail("expected ','");
    cur.advance();
  }
  const std::size_t expected = fundamental ? rs.rank() : rs.ambient_dim();
  if (values.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + (fundamental ? " fundamental" : " ambient") +
                         " coordinates for " + rs.label() + ", got " + std::to_string(values.size()),
                     text.size());
  return fundamental ? rs.from_fundamental(values) : Weight(std::move(values));
}

}  // namespace discdeg
