#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "horadam/errors.hpp"
#include "horadam/quad.hpp"
#include "horadam/rational.hpp"

namespace horadam {

/// Dense N x N matrix over an exact scalar (Rational or QuadElem).
template <class T, std::size_t N>
class Mat {
 public:
  using value_type = T;
  static constexpr std::size_t size = N;

  Mat() : a_{} {
    for (auto& x : a_) x = T(0);
  }

  Mat(std::initializer_list<std::initializer_list<T>> rows) : Mat() {
    if (rows.size() != N) throw ContractViolation("wrong row count");
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != N) throw ContractViolation("wrong column count");
      std::size_t j = 0;
      for (const auto& x : row) (*this)(i, j++) = x;
      ++i;
    }
  }

  static Mat identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = T(1);
    return m;
  }

  static Mat from_columns(const std::array<std::array<T, N>, N>& cols) {
    Mat m;
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t i = 0; i < N; ++i) m(i, j) = cols[j][i];
    return m;
  }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * N + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * N + j]; }

  Mat& operator+=(const Mat& o) {
    for (std::size_t k = 0; k < N * N; ++k) a_[k] += o.a_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (std::size_t k = 0; k < N * N; ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Mat& operator*=(const T& c) {
    for (auto& x : a_) x *= c;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const T& c) { return a *= c; }
  friend Mat operator*(const T& c, Mat a) { return a *= c; }
  Mat operator-() const {
    Mat m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat out;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        T acc = x(i, 0) * y(0, j);
        for (std::size_t k = 1; k < N; ++k) acc += x(i, k) * y(k, j);
        out(i, j) = std::move(acc);
      }
    }
    return out;
  }

  friend bool operator==(const Mat& x, const Mat& y) { return x.a_ == y.a_; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  T trace() const {
    T t = a_[0];
    for (std::size_t i = 1; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  std::array<T, N> column(std::size_t j) const {
    std::array<T, N> c;
    for (std::size_t i = 0; i < N; ++i) c[i] = (*this)(i, j);
    return c;
  }

  /// Row-major text rendering of every entry.
  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> rows(N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) rows[i].push_back((*this)(i, j).str());
    return rows;
  }

 private:
  std::array<T, N * N> a_;
};

using Mat2 = Mat<Rational, 2>;
using Mat3 = Mat<Rational, 3>;
using QMat3 = Mat<QuadElem, 3>;

template <class T, std::size_t N>
std::array<T, N> operator*(const Mat<T, N>& m, const std::array<T, N>& v) {
  std::array<T, N> out;
  for (std::size_t i = 0; i < N; ++i) {
    T acc = m(i, 0) * v[0];
    for (std::size_t k = 1; k < N; ++k) acc += m(i, k) * v[k];
    out[i] = std::move(acc);
  }
  return out;
}

/// m^n with O(log n) products; m^0 = I. Singular m is fine.
template <class T, std::size_t N>
Mat<T, N> mat_pow(const Mat<T, N>& m, std::uint64_t n) {
  Mat<T, N> result = Mat<T, N>::identity();
  Mat<T, N> base = m;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

template <class T>
T mat_det(const Mat<T, 2>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <class T>
T mat_det(const Mat<T, 3>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Adjugate over determinant; SingularMatrix when det == 0.
template <class T>
Mat<T, 3> mat_inverse(const Mat<T, 3>& m) {
  T det = mat_det(m);
  if (det.is_zero()) throw SingularMatrix("matrix is singular");
  Mat<T, 3> adj;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // cofactor C_ji lands at (i, j)
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  T inv_det = T(1) / det;
  return adj * inv_det;
}

template <class T>
Mat<T, 2> mat_inverse(const Mat<T, 2>& m) {
  T det = mat_det(m);
  if (det.is_zero()) throw SingularMatrix("matrix is singular");
  Mat<T, 2> adj{{m(1, 1), -m(0, 1)}, {-m(1, 0), m(0, 0)}};
  return adj * (T(1) / det);
}

QMat3 to_quad(const Mat3& m);

/// Throws PatternNotSupported if any entry carries a sqrt(D) part.
Mat3 to_rational(const QMat3& m);

/// Q_h = [[r, s], [1, 0]].
Mat2 companion(const Rational& r, const Rational& s);

/// [[h_{n+1}, s h_n], [h_n, s h_{n-1}]] assembled from sequence values; n >= 1.
Mat2 companion_power_form(const Rational& r, const Rational& s, std::int64_t n);

/// Q_h^n == h_n Q_h + s h_{n-1} I_2.
bool companion_decomposition_check(const Rational& r, const Rational& s, std::int64_t n);

}  // namespace horadam
