#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "horadam/rational.hpp"

namespace horadam {

/// The field Q(sqrt D) for a fixed positive discriminant D.
class QuadField {
 public:
  /// Throws OutOfHypothesis when disc <= 0.
  explicit QuadField(Rational disc);

  static std::shared_ptr<const QuadField> make(Rational disc) {
    return std::make_shared<const QuadField>(std::move(disc));
  }

  const Rational& disc() const { return disc_; }
  /// sqrt(D) when D is the square of a rational.
  const std::optional<Rational>& rational_sqrt() const { return sqrt_; }
  bool is_square() const { return sqrt_.has_value(); }

 private:
  Rational disc_;
  std::optional<Rational> sqrt_;
};

using FieldPtr = std::shared_ptr<const QuadField>;

/**
 * Element p + q*sqrt(D) of Q(sqrt D).
 *
 * An element without a field is a plain rational; it combines with elements
 * of any field and adopts that field. Two elements carrying fields with
 * different discriminants never mix (ContractViolation). When D is a perfect
 * square the sqrt(D) part is folded into the rational part, so irr() == 0.
 */
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(Rational rat) : rat_(std::move(rat)) {}  // NOLINT(google-explicit-constructor)
  QuadElem(long rat) : rat_(rat) {}                 // NOLINT(google-explicit-constructor)
  QuadElem(int rat) : rat_(rat) {}                  // NOLINT(google-explicit-constructor)
  QuadElem(Rational rat, Rational irr, FieldPtr field);

  /// The element sqrt(D) of the given field.
  static QuadElem sqrt_disc(const FieldPtr& field) { return QuadElem(Rational(0), Rational(1), field); }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }
  const FieldPtr& field() const { return field_; }
  /// Discriminant of the carrying field, if any.
  std::optional<Rational> disc() const;

  bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
  bool is_rational() const { return irr_.is_zero(); }
  /// Throws ContractViolation if the sqrt(D) coefficient is nonzero.
  Rational to_rational() const;

  QuadElem conj() const;
  /// p^2 - q^2 D
  Rational norm() const;

  std::string str() const;

  QuadElem operator-() const;
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);

  friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
  friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
  friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
  friend QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }

  friend bool operator==(const QuadElem& a, const QuadElem& b);

 private:
  void adopt(const QuadElem& o);
  void fold();

  Rational rat_;
  Rational irr_;
  FieldPtr field_;
};

/// Product with O(1) rational operations; ContractViolation on field mismatch.
inline QuadElem quad_mul(const QuadElem& x, const QuadElem& y) { return x * y; }

/// x^n by binary exponentiation; x^0 = 1.
QuadElem quad_pow(const QuadElem& x, std::uint64_t n);

/// (p + q sqrt D)^-1 = (p - q sqrt D) / (p^2 - q^2 D). Throws DivisionByZero for x = 0.
QuadElem quad_inverse(const QuadElem& x);

std::ostream& operator<<(std::ostream& os, const QuadElem& x);

}  // namespace horadam
