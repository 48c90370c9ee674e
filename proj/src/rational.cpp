#include "horadam/rational.hpp"

#include <ostream>

#include "horadam/errors.hpp"

namespace horadam {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational Rational::normalize(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  Rational out;
  out.v_.get_num() = num;
  out.v_.get_den() = den;
  out.v_.canonicalize();
  return out;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_part = body.substr(0, slash);
  std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw ParseError("malformed fraction: '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_part), 10);
  BigInt den(std::string(den_part), 10);
  if (negative) num = -num;
  return normalize(num, den);
}

Rational Rational::abs() const {
  Rational out;
  out.v_ = ::abs(v_);
  return out;
}

Rational Rational::pow(std::int64_t exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw DivisionByZero("zero raised to a negative power");
    return (Rational(1) / *this).pow(-exponent);
  }
  Rational out;
  auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(out.v_.get_num_mpz_t(), num().get_mpz_t(), e);
  mpz_pow_ui(out.v_.get_den_mpz_t(), den().get_mpz_t(), e);
  return out;
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(num().get_mpz_t()) || !mpz_perfect_square_p(den().get_mpz_t())) {
    return std::nullopt;
  }
  Rational out;
  mpz_sqrt(out.v_.get_num_mpz_t(), num().get_mpz_t());
  mpz_sqrt(out.v_.get_den_mpz_t(), den().get_mpz_t());
  return out;
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::operator-() const {
  Rational out;
  out.v_ = -v_;
  return out;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

std::size_t decimal_digits(const BigInt& value) {
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t guess = mpz_sizeinbase(value.get_mpz_t(), 10);
  if (guess <= 1) return 1;
  BigInt bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, guess - 1);
  BigInt mag = ::abs(value);
  return mag >= bound ? guess : guess - 1;
}

}  // namespace horadam
