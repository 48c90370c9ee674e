#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "horadam/quad.hpp"
#include "horadam/rational.hpp"

namespace horadam {

/// H_0 = a, H_1 = b, H_{n+2} = r H_{n+1} + s H_n.
struct RecurrenceParams {
  Rational a{0};
  Rational b{1};
  Rational r{1};
  Rational s{1};

  /// The generalized Fibonacci slice h_n = H_n(0, 1; r, s).
  static RecurrenceParams generalized(Rational r, Rational s) {
    return {Rational(0), Rational(1), std::move(r), std::move(s)};
  }

  Rational discriminant() const { return r * r + Rational(4) * s; }

  friend bool operator==(const RecurrenceParams&, const RecurrenceParams&) = default;
};

struct SeqValue {
  std::int64_t index = 0;
  Rational value;
};

/// H_n by iteration; negative n runs the recurrence backwards and needs s != 0.
Rational horadam_eval(const RecurrenceParams& p, std::int64_t n);

/// H_n for every n in [from, to], walking the recurrence once.
std::vector<SeqValue> horadam_range(const RecurrenceParams& p, std::int64_t from, std::int64_t to);

/// h_n = H_n(0, 1; r, s); gen_fib(r, s, -1) = 1/s.
Rational gen_fib(const Rational& r, const Rational& s, std::int64_t n);

/// h_first, ..., h_{first+count-1}. Uses fast doubling to reach `first`.
std::vector<Rational> gen_fib_window(const Rational& r, const Rational& s, std::int64_t first,
                                     std::size_t count);

/// alpha, beta: roots of x^2 - r x - s, living in Q(sqrt(r^2 + 4s)).
struct Roots {
  QuadElem alpha;
  QuadElem beta;
  FieldPtr field;
};

/// Throws OutOfHypothesis when r^2 + 4s <= 0.
Roots roots(const Rational& r, const Rational& s);

/// (alpha^n - beta^n) / (alpha - beta), evaluated in Q(sqrt D).
Rational binet_eval(const Rational& r, const Rational& s, std::int64_t n);

/// alpha^n = alpha h_n + s h_{n-1} and the same for beta, exactly; n >= 1.
bool linear_approx_check(const Rational& r, const Rational& s, std::int64_t n);

/// (h_n, h_{n+1}) in O(log n) ring operations:
///   h_{2k}   = h_k (2 h_{k+1} - r h_k)
///   h_{2k+1} = h_{k+1}^2 + s h_k^2
std::pair<Rational, Rational> fast_gen_fib(const Rational& r, const Rational& s, std::uint64_t n);

}  // namespace horadam
