#include "horadam/sequences.hpp"

#include <bit>

#include "horadam/errors.hpp"

namespace horadam {

namespace {

void require_backward(const Rational& s) {
  if (s.is_zero()) {
    throw BackwardExtensionError("negative indices need s != 0");
  }
}

// Doubling kernel shared by the integer and rational paths.
template <class T>
std::pair<T, T> doubling(const T& r, const T& s, std::uint64_t n) {
  T lo = 0;  // h_k
  T hi = 1;  // h_{k+1}
  if (n == 0) return {lo, hi};
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    T two_k = lo * (T(2) * hi - r * lo);
    T two_k1 = hi * hi + s * lo * lo;
    if ((n >> bit) & 1U) {
      lo = two_k1;
      hi = r * two_k1 + s * two_k;
    } else {
      lo = std::move(two_k);
      hi = std::move(two_k1);
    }
  }
  return {std::move(lo), std::move(hi)};
}

}  // namespace

Rational horadam_eval(const RecurrenceParams& p, std::int64_t n) {
  Rational prev = p.a;  // H_k
  Rational cur = p.b;   // H_{k+1}
  if (n >= 0) {
    for (std::int64_t k = 0; k < n; ++k) {
      Rational next = p.r * cur + p.s * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return prev;
  }
  require_backward(p.s);
  for (std::int64_t k = 0; k > n; --k) {
    Rational before = (cur - p.r * prev) / p.s;
    cur = std::move(prev);
    prev = std::move(before);
  }
  return prev;
}

std::vector<SeqValue> horadam_range(const RecurrenceParams& p, std::int64_t from, std::int64_t to) {
  std::vector<SeqValue> out;
  if (from > to) return out;
  Rational prev = p.a;
  Rational cur = p.b;
  std::int64_t k = 0;
  if (from < 0) {
    require_backward(p.s);
    for (; k > from; --k) {
      Rational before = (cur - p.r * prev) / p.s;
      cur = std::move(prev);
      prev = std::move(before);
    }
  } else {
    for (; k < from; ++k) {
      Rational next = p.r * cur + p.s * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  out.reserve(static_cast<std::size_t>(to - from + 1));
  for (; k <= to; ++k) {
    out.push_back({k, prev});
    Rational next = p.r * cur + p.s * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

Rational gen_fib(const Rational& r, const Rational& s, std::int64_t n) {
  return horadam_eval(RecurrenceParams::generalized(r, s), n);
}

std::vector<Rational> gen_fib_window(const Rational& r, const Rational& s, std::int64_t first,
                                     std::size_t count) {
  std::vector<Rational> out;
  if (count == 0) return out;
  out.reserve(count);
  if (first >= 0) {
    auto [lo, hi] = fast_gen_fib(r, s, static_cast<std::uint64_t>(first));
    out.push_back(lo);
    if (count > 1) out.push_back(hi);
    while (out.size() < count) {
      out.push_back(r * out[out.size() - 1] + s * out[out.size() - 2]);
    }
    return out;
  }
  for (auto& v : horadam_range(RecurrenceParams::generalized(r, s), first,
                               first + static_cast<std::int64_t>(count) - 1)) {
    out.push_back(std::move(v.value));
  }
  return out;
}

Roots roots(const Rational& r, const Rational& s) {
  auto field = QuadField::make(r * r + Rational(4) * s);
  Rational half_r = r / Rational(2);
  Rational half(Rational::normalize(1, 2));
  return {QuadElem(half_r, half, field), QuadElem(half_r, -half, field), field};
}

Rational binet_eval(const Rational& r, const Rational& s, std::int64_t n) {
  auto [alpha, beta, field] = roots(r, s);
  if (n < 0) require_backward(s);
  auto power = [n](const QuadElem& x) {
    return n >= 0 ? quad_pow(x, static_cast<std::uint64_t>(n))
                  : quad_inverse(quad_pow(x, static_cast<std::uint64_t>(-n)));
  };
  QuadElem value = (power(alpha) - power(beta)) / (alpha - beta);
  return value.to_rational();
}

bool linear_approx_check(const Rational& r, const Rational& s, std::int64_t n) {
  if (n < 1) throw DomainError("linear approximation needs n >= 1");
  auto [alpha, beta, field] = roots(r, s);
  auto [h_prev, h_n] = fast_gen_fib(r, s, static_cast<std::uint64_t>(n - 1));
  QuadElem tail(s * h_prev);
  auto e = static_cast<std::uint64_t>(n);
  return quad_pow(alpha, e) == alpha * QuadElem(h_n) + tail &&
         quad_pow(beta, e) == beta * QuadElem(h_n) + tail;
}

std::pair<Rational, Rational> fast_gen_fib(const Rational& r, const Rational& s, std::uint64_t n) {
  if (r.is_integer() && s.is_integer()) {
    auto [lo, hi] = doubling<BigInt>(r.num(), s.num(), n);
    return {Rational(std::move(lo)), Rational(std::move(hi))};
  }
  return doubling<Rational>(r, s, n);
}

}  // namespace horadam
