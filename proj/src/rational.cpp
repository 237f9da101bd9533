#include "discdeg/rational.hpp"

#include <stdexcept>

namespace discdeg {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)),
                     mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  value_.canonicalize();
}

Rational::Rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("Rational: bad number '" + s + "'");
    value_ = mpq_class(mpz_class(s, 10));
    return;
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw std::invalid_argument("Rational: bad number '" + s + "'");
  mpz_class d(den, 10);
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(mpz_class(num, 10), d);
  value_.canonicalize();
}

Rational Rational::from_integer_string(std::string_view digits) {
  return Rational(mpq_class(mpz_class(std::string(digits), 10)));
}

std::optional<long long> Rational::to_int64() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) return std::nullopt;
  return value_.get_num().get_si();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("Rational: zero to negative power");
    return Rational(1) / pow(-exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  // already coprime
  Rational out;
  out.value_ = mpq_class(num, den);
  return out;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(mpq_class(b));
}

Rational double_factorial_odd(int k) {
  Rational out(1);
  for (int j = 1; j <= 2 * k - 1; j += 2) out *= Rational(j);
  return out;
}

}  // namespace discdeg
