#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace horadam {

using BigInt = mpz_class;

/**
 * Exact rational number backed by GMP.
 *
 * Always kept in canonical form: the denominator is positive, numerator and
 * denominator are coprime, and zero is 0/1. Two Rationals are equal iff their
 * (num, den) pairs are equal.
 */
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : v_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : v_(value) {}
  explicit Rational(BigInt&& value) : v_(std::move(value)) {}

  /// Reduces num/den; throws DivisionByZero when den == 0.
  static Rational normalize(const BigInt& num, const BigInt& den);

  /// Parses "p" or "p/q" (optional sign on p). Throws ParseError.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return v_.get_num(); }
  const BigInt& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const;

  /// Integer power; negative exponents invert (zero base then throws).
  Rational pow(std::int64_t exponent) const;

  /// Exact square root if this is the square of a rational.
  std::optional<Rational> exact_sqrt() const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline Rational rat_normalize(const BigInt& num, const BigInt& den) {
  return Rational::normalize(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Number of decimal digits of |value| (1 for zero).
std::size_t decimal_digits(const BigInt& value);

}  // namespace horadam
