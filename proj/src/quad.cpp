#include "horadam/quad.hpp"

#include <ostream>

#include "horadam/errors.hpp"

namespace horadam {

QuadField::QuadField(Rational disc) : disc_(std::move(disc)) {
  if (disc_.sign() <= 0) {
    throw OutOfHypothesis("discriminant must be positive, got " + disc_.str());
  }
  sqrt_ = disc_.exact_sqrt();
}

QuadElem::QuadElem(Rational rat, Rational irr, FieldPtr field)
    : rat_(std::move(rat)), irr_(std::move(irr)), field_(std::move(field)) {
  if (!field_ && !irr_.is_zero()) {
    throw ContractViolation("sqrt(D) coefficient given without a field");
  }
  fold();
}

std::optional<Rational> QuadElem::disc() const {
  if (!field_) return std::nullopt;
  return field_->disc();
}

Rational QuadElem::to_rational() const {
  if (!irr_.is_zero()) throw ContractViolation("element " + str() + " is not rational");
  return rat_;
}

QuadElem QuadElem::conj() const {
  QuadElem out = *this;
  out.irr_ = -irr_;
  return out;
}

Rational QuadElem::norm() const {
  if (irr_.is_zero()) return rat_ * rat_;
  return rat_ * rat_ - irr_ * irr_ * field_->disc();
}

std::string QuadElem::str() const {
  if (irr_.is_zero()) return rat_.str();
  std::string d = field_->disc().str();
  return rat_.str() + (irr_.sign() < 0 ? " - " : " + ") + irr_.abs().str() + "*sqrt(" + d + ")";
}

void QuadElem::adopt(const QuadElem& o) {
  if (!o.field_) return;
  if (!field_) {
    field_ = o.field_;
    return;
  }
  if (field_ != o.field_ && field_->disc() != o.field_->disc()) {
    throw ContractViolation("mixed discriminants " + field_->disc().str() + " and " +
                            o.field_->disc().str());
  }
}

void QuadElem::fold() {
  if (field_ && field_->is_square() && !irr_.is_zero()) {
    rat_ += irr_ * *field_->rational_sqrt();
    irr_ = Rational(0);
  }
}

QuadElem QuadElem::operator-() const {
  QuadElem out = *this;
  out.rat_ = -rat_;
  out.irr_ = -irr_;
  return out;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  adopt(o);
  rat_ += o.rat_;
  irr_ += o.irr_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  adopt(o);
  rat_ -= o.rat_;
  irr_ -= o.irr_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  adopt(o);
  if (irr_.is_zero() && o.irr_.is_zero()) {
    rat_ *= o.rat_;
    return *this;
  }
  Rational p = rat_ * o.rat_ + irr_ * o.irr_ * field_->disc();
  Rational q = rat_ * o.irr_ + irr_ * o.rat_;
  rat_ = std::move(p);
  irr_ = std::move(q);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  adopt(o);
  return *this *= quad_inverse(o);
}

bool operator==(const QuadElem& a, const QuadElem& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_ && a.field_->disc() != b.field_->disc()) {
    throw ContractViolation("comparing elements of different quadratic fields");
  }
  return a.rat_ == b.rat_ && a.irr_ == b.irr_;
}

QuadElem quad_pow(const QuadElem& x, std::uint64_t n) {
  QuadElem result(Rational(1));
  QuadElem base = x;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  // x^0 still belongs to x's field.
  return result + QuadElem(Rational(0), Rational(0), x.field());
}

QuadElem quad_inverse(const QuadElem& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt D)");
  Rational n = x.norm();
  // Folding guarantees n != 0 here: a zero norm needs D to be a rational square.
  QuadElem c = x.conj();
  return QuadElem(c.rat() / n, c.irr() / n, x.field());
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.str(); }

}  // namespace horadam
