#include <doctest.h>

#include <random>

#include "horadam/errors.hpp"
#include "horadam/matrix.hpp"
#include "horadam/sequences.hpp"

using namespace horadam;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

Mat3 random_mat3(std::mt19937_64& rng) {
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      m(i, j) = Rational::normalize(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 4) + 1);
  return m;
}

const std::pair<long, long> kPresets[] = {{1, 1}, {2, 1}, {1, 2}, {6, -1}, {3, 2}, {5, 3}};

}  // namespace

TEST_CASE("mat_mul") {
  Mat3 m{{1, 2, 3}, {q("1/2"), 0, -1}, {4, q("-7/3"), 5}};
  CHECK(Mat3::identity() * m == m);
  CHECK(m * Mat3::identity() == m);
  Mat2 qh = companion(1, 1);
  CHECK(qh * qh == Mat2{{2, 1}, {1, 1}});
  Mat3 e{{1, 1, 1}, {-1, -1, -1}, {1, 1, 1}};
  CHECK(e * e == e);
}

TEST_CASE("QuadElem matrices reject mixed fields") {
  auto a = roots(1, 1);
  auto b = roots(2, 1);
  QMat3 x = QMat3::identity() * a.alpha;
  QMat3 y = QMat3::identity() * b.alpha;
  CHECK_THROWS_AS(x * y, ContractViolation);
}

TEST_CASE("mat_pow") {
  Mat3 m{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  CHECK(mat_pow(m, 0) == Mat3::identity());
  CHECK(mat_pow(companion(1, 1), 5) == Mat2{{8, 5}, {5, 3}});
  Mat3 g1{{1, 0, -1}, {-1, -1, 0}, {0, 1, 1}};
  Mat3 slow = g1;
  for (int k = 1; k < 4; ++k) slow = slow * g1;
  CHECK(mat_pow(g1, 4) == slow);
  CHECK(mat_pow(g1, 4) == Mat3{{3, -2, -5}, {-1, 1, 2}, {-2, 1, 3}});
  // singular matrices are fine
  Mat3 nil{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  CHECK(mat_pow(nil, 3).is_zero());
}

TEST_CASE("mat_det") {
  for (const auto& [r, s] : kPresets) CHECK(mat_det(companion(r, s)) == Rational(-s));
  CHECK(mat_det(Mat3::identity()) == Rational(1));
  CHECK(mat_det(Mat3{{2, 0, 0}, {0, 3, 0}, {1, 1, q("1/6")}}) == Rational(1));
  CHECK(mat_det(Mat3{{1, 0, -1}, {-1, -1, 0}, {0, 1, 1}}) == Rational(0));
}

TEST_CASE("mat_inverse") {
  CHECK(mat_inverse(Mat3::identity()) == Mat3::identity());
  Mat3 singular{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK_THROWS_AS(mat_inverse(singular), SingularMatrix);
  CHECK_THROWS_AS(mat_inverse(Mat2{{1, 2}, {2, 4}}), SingularMatrix);
  Mat2 two{{2, 1}, {7, 4}};
  CHECK(mat_inverse(two) * two == Mat2::identity());

  // Eigenvector matrix over Q(sqrt 5) with z = (1, -1, 1).
  auto [alpha, beta, field] = roots(1, 1);
  QMat3 p{{alpha, beta, QuadElem(1)}, {beta, alpha, QuadElem(-1)}, {QuadElem(-1), QuadElem(-1), QuadElem(1)}};
  QMat3 p_inv = mat_inverse(p);
  CHECK(p * p_inv == QMat3::identity());
  CHECK(p_inv * p == QMat3::identity());
}

TEST_CASE("mat_mul is associative and inverse undoes it on random triples") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    Mat3 a = random_mat3(rng), b = random_mat3(rng), c = random_mat3(rng);
    CHECK((a * b) * c == a * (b * c));
    if (!mat_det(a).is_zero()) {
      CHECK(mat_inverse(a) * a == Mat3::identity());
      CHECK(mat_det(mat_inverse(a)) * mat_det(a) == Rational(1));
    }
  }
}

TEST_CASE("companion") {
  CHECK(companion(1, 1) == Mat2{{1, 1}, {1, 0}});
  CHECK(companion(2, 1) == Mat2{{2, 1}, {1, 0}});
  CHECK(companion(6, -1) == Mat2{{6, -1}, {1, 0}});
}

TEST_CASE("companion_power_form") {
  CHECK(companion_power_form(1, 1, 3) == Mat2{{3, 2}, {2, 1}});
  CHECK(companion_power_form(1, 1, 1) == companion(1, 1));
  CHECK(companion_power_form(2, 1, 4) == Mat2{{29, 12}, {12, 5}});
  CHECK_THROWS_AS(companion_power_form(1, 1, 0), DomainError);
  for (const auto& [r, s] : kPresets) {
    for (std::uint64_t n = 1; n <= 64; ++n) {
      CHECK(companion_power_form(r, s, static_cast<std::int64_t>(n)) == mat_pow(companion(r, s), n));
    }
  }
}

TEST_CASE("companion_decomposition_check") {
  CHECK(companion_decomposition_check(1, 1, 6));
  CHECK(companion_decomposition_check(q("4/3"), q("-1/2"), 1));
  CHECK(companion_decomposition_check(6, -1, 9));
  for (const auto& [r, s] : kPresets)
    for (std::int64_t n = 1; n <= 40; ++n) CHECK(companion_decomposition_check(r, s, n));
}

TEST_CASE("companion matrix spectral facts") {
  for (const auto& [r, s] : kPresets) {
    Mat2 qh = companion(r, s);
    CHECK(qh.trace() == Rational(r));
    CHECK((qh * qh - qh * Rational(r) - Mat2::identity() * Rational(s)).is_zero());
    for (std::uint64_t n = 1; n <= 64; ++n) {
      CHECK(mat_det(mat_pow(qh, n)) == Rational(-s).pow(static_cast<std::int64_t>(n)));
    }
  }
}

TEST_CASE("to_rational rejects irrational entries") {
  auto [alpha, beta, field] = roots(1, 1);
  QMat3 m = QMat3::identity();
  CHECK(to_rational(m) == Mat3::identity());
  m(1, 2) = alpha;
  CHECK_THROWS_AS(to_rational(m), PatternNotSupported);
}
