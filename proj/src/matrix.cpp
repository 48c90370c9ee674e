#include "horadam/matrix.hpp"

#include "horadam/sequences.hpp"

namespace horadam {

QMat3 to_quad(const Mat3& m) {
  QMat3 q;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) q(i, j) = QuadElem(m(i, j));
  return q;
}

Mat3 to_rational(const QMat3& m) {
  Mat3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (!m(i, j).is_rational()) {
        throw PatternNotSupported("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") = " + m(i, j).str() + " is irrational");
      }
      out(i, j) = m(i, j).rat();
    }
  }
  return out;
}

Mat2 companion(const Rational& r, const Rational& s) { return Mat2{{r, s}, {Rational(1), Rational(0)}}; }

Mat2 companion_power_form(const Rational& r, const Rational& s, std::int64_t n) {
  if (n < 1) throw DomainError("companion power form needs n >= 1");
  auto h = gen_fib_window(r, s, n - 1, 3);  // h_{n-1}, h_n, h_{n+1}
  return Mat2{{h[2], s * h[1]}, {h[1], s * h[0]}};
}

bool companion_decomposition_check(const Rational& r, const Rational& s, std::int64_t n) {
  if (n < 1) throw DomainError("companion decomposition needs n >= 1");
  auto [h_prev, h_n] = fast_gen_fib(r, s, static_cast<std::uint64_t>(n - 1));
  Mat2 q = companion(r, s);
  return mat_pow(q, static_cast<std::uint64_t>(n)) == q * h_n + Mat2::identity() * (s * h_prev);
}

}  // namespace horadam
