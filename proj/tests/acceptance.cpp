// Acceptance suite: one line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "horadam/derivation.hpp"
#include "horadam/identities.hpp"
#include "horadam/matrix.hpp"
#include "horadam/sequences.hpp"
#include "oracle.hpp"

using namespace horadam;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // <= 0: no limit
  std::function<void(Outcome&)> body;
};

const std::vector<std::pair<long, long>> kGrid = {{1, 1}, {2, 1}, {1, 2}, {6, -1}, {3, 2}, {5, 3}};

bool in_domain(int which, long r) { return r != 0 && !(which == 2 && r == 2); }

KernelPattern pattern_of(int which) {
  return which == 1 ? KernelPattern::theorem1() : which == 2 ? KernelPattern::theorem2() : KernelPattern::theorem3();
}

std::string tag(long r, long s, std::int64_t n) {
  return "r=" + std::to_string(r) + " s=" + std::to_string(s) + " n=" + std::to_string(n);
}

Rational R(const mpq_class& x) { return Rational::parse(x.get_str()); }

// Printed corollary right-hand sides with terms from the recurrence oracle.
Mat3 fibonacci_form(const oracle::Table& F, std::int64_t n) {
  return Mat3{{R(F[n]), R(-F[n - 1]), R(-F[n + 1])},
              {R(-F[n - 2]), R(F[n - 3]), R(F[n - 1])},
              {R(-F[n - 1]), R(F[n - 2]), R(F[n])}};
}

Mat3 jacobsthal_form(const oracle::Table& J, std::int64_t n) {
  return Mat3{{R(2 * J[n]), R(-(J[n + 1] - 2 * J[n])), R(-J[n + 1])},
              {R(-4 * J[n - 2]), R(2 * (J[n - 1] - 2 * J[n - 2])), R(2 * J[n - 1])},
              {R(-2 * J[n - 1]), R(J[n] - 2 * J[n - 1]), R(J[n])}};
}

void criterion_g1(Outcome& o) {
  auto F = oracle::table(1, 1, -3, 52);
  o.expect(F[-2] == -1 && F[-1] == 1, "F_{-2} = -1, F_{-1} = 1");
  Mat3 a{{1, 0, -1}, {-1, -1, 0}, {0, 1, 1}};
  for (std::int64_t n = 1; n <= 50; ++n) {
    o.expect(mat_pow(a, static_cast<std::uint64_t>(n)) == fibonacci_form(F, n), "mismatch at n=" + std::to_string(n));
  }
}

void criterion_g3(Outcome& o) {
  auto J = oracle::table(1, 2, -3, 52);
  Mat3 a{{2, 1, -1}, {-2, -2, 0}, {0, 1, 1}};
  for (std::int64_t n = 1; n <= 50; ++n) {
    o.expect(mat_pow(a, static_cast<std::uint64_t>(n)) == jacobsthal_form(J, n), "mismatch at n=" + std::to_string(n));
  }
}

void criterion_g2(Outcome& o) {
  auto sys = derive(2, 1, KernelPattern::theorem1());
  // (1/r)[[r(r-1)+s, s-r, -r^2], [-s, -s, 0], [1-r, 1, r]] at r = 2, s = 1.
  mpq_class r = 2, s = 1;
  oracle::M3 z10 = {{{r * (r - 1) + s, s - r, -r * r}, {-s, -s, 0}, {1 - r, 1, r}}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) o.expect(sys.A(i, j) == R(z10[i][j] / r), "A differs from the closed-form matrix");

  auto [alpha, beta, field] = roots(2, 1);
  QMat3 aq = to_quad(sys.A);
  auto x = sys.P.column(0), y = sys.P.column(1), z = sys.P.column(2);
  auto ax = aq * x, ay = aq * y, az = aq * z;
  for (std::size_t i = 0; i < 3; ++i) {
    o.expect(ax[i] == alpha * x[i], "A x != alpha x");
    o.expect(ay[i] == beta * y[i], "A y != beta y");
    o.expect(az[i].is_zero(), "A z != 0");
  }
  for (std::int64_t n = 1; n <= 50; ++n) {
    Mat3 p = mat_pow(sys.A, static_cast<std::uint64_t>(n));
    o.expect(p == closed_power(sys, n), "mat_pow != closed_power at n=" + std::to_string(n));
    o.expect(p == theorem_form(1, 2, 1, n), "mat_pow != theorem form at n=" + std::to_string(n));
  }

  auto report = check_corollary_print("pell", 50);
  o.expect(report.status == Status::discrepancy, "expected the printed Pell matrices to disagree in some entry");
  std::cout << "      discrepancy report: " << report.note << '\n';
}

void criterion_theorems(Outcome& o) {
  for (int which = 1; which <= 3; ++which) {
    for (const auto& [r, s] : kGrid) {
      if (!in_domain(which, r)) continue;
      Mat3 a = theorem_matrix(which, r, s);
      auto sys = derive(r, s, pattern_of(which));
      o.expect(sys.A == a, "derived A differs from theorem " + std::to_string(which));
      for (std::int64_t n = 1; n <= 64; ++n) {
        Mat3 p = mat_pow(a, static_cast<std::uint64_t>(n));
        o.expect(p == closed_power(sys, n), "closed_power, theorem " + std::to_string(which) + " " + tag(r, s, n));
        o.expect(p == theorem_form(which, r, s, n), "theorem_form, theorem " + std::to_string(which) + " " + tag(r, s, n));
      }
    }
  }
}

void criterion_cassini(Outcome& o) {
  for (const auto& [r, s] : kGrid) {
    auto h = oracle::table(r, s, 0, 201);
    for (std::int64_t n = 1; n <= 200; ++n) {
      mpq_class lhs = h[n] * h[n] - h[n - 1] * h[n + 1];
      o.expect(R(lhs) == Rational(-s).pow(n - 1), "Cassini " + tag(r, s, n));
      o.expect(mat_det(mat_pow(companion(r, s), static_cast<std::uint64_t>(n))) == Rational(-s).pow(n),
               "det(Q^n) " + tag(r, s, n));
    }
    o.expect(check_cassini(r, s, 200).status == Status::pass, "check_cassini report");
  }
}

void criterion_cubic(Outcome& o) {
  for (const auto& [r, s] : kGrid) {
    auto h = oracle::table(r, s, 0, 102);
    for (std::int64_t n = 2; n <= 100; ++n) {
      mpq_class lhs = h[n] * h[n] * h[n] + h[n - 1] * h[n - 1] * h[n + 2] + h[n + 1] * h[n + 1] * h[n - 2];
      mpq_class rhs = h[n] * (h[n - 2] * h[n + 2] + 2 * h[n - 1] * h[n + 1]);
      o.expect(lhs == rhs, "cubic " + tag(r, s, n));
    }
    o.expect(check_cubic(r, s, 100).status == Status::pass, "check_cubic report");
  }
}

void criterion_binet(Outcome& o) {
  for (const auto& [r, s] : kGrid) {
    auto h = oracle::table(r, s, -10, 100);
    for (std::int64_t n = -10; n <= 100; ++n) {
      o.expect(binet_eval(r, s, n) == R(h[n]), "Binet " + tag(r, s, n));
    }
  }
  o.expect(QuadField(Rational(9)).is_square(), "(1, 2) has a perfect-square discriminant");
}

void criterion_linear(Outcome& o) {
  for (const auto& [r, s] : kGrid) {
    auto [alpha, beta, field] = roots(r, s);
    auto h = oracle::table(r, s, 0, 100);
    for (std::int64_t n = 1; n <= 100; ++n) {
      auto e = static_cast<std::uint64_t>(n);
      QuadElem tail(R(s * h[n - 1]));
      o.expect(quad_pow(alpha, e) == alpha * QuadElem(R(h[n])) + tail, "alpha^n " + tag(r, s, n));
      o.expect(quad_pow(beta, e) == beta * QuadElem(R(h[n])) + tail, "beta^n " + tag(r, s, n));
      o.expect(linear_approx_check(r, s, n), "linear_approx_check " + tag(r, s, n));
    }
  }
}

void criterion_projector(Outcome& o) {
  for (int which = 1; which <= 3; ++which) {
    for (const auto& [r, s] : kGrid) {
      if (!in_domain(which, r)) continue;
      auto sys = derive(r, s, pattern_of(which));
      const Mat3& a = sys.A;
      const Mat3& e = sys.E;
      std::string where = "theorem " + std::to_string(which) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
      o.expect(e * e == e, "E^2 = E, " + where);
      o.expect((a * e).is_zero() && (e * a).is_zero(), "AE = EA = 0, " + where);
      o.expect(mat_det(a).is_zero(), "det A = 0, " + where);
      o.expect(a.trace() == Rational(r), "trace A = r, " + where);
      o.expect(a * a * a == a * a * Rational(r) + a * Rational(s), "A^3 = rA^2 + sA, " + where);
    }
  }
}

void criterion_performance(Outcome& o) {
  auto start = std::chrono::steady_clock::now();
  auto [f, f_next] = fast_gen_fib(1, 1, 1000000);
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(elapsed < 5.0, "fast_gen_fib(10^6) took " + std::to_string(elapsed) + " s");

  mpz_class reference = oracle::fib_doubling(1000000);
  o.expect(f.num() == reference && f.is_integer(), "F_1000000 differs from the doubling oracle");
  mpz_class gmp_fib;
  mpz_fib_ui(gmp_fib.get_mpz_t(), 1000000);
  o.expect(reference == gmp_fib, "oracles disagree on F_1000000");
  o.expect(reference.get_str().size() == 208988, "F_1000000 should have 208988 digits");
  o.expect(decimal_digits(f.num()) == 208988, "decimal_digits(F_1000000)");

  Mat2 q = mat_pow(companion(1, 1), 100000);
  auto [g, g_next] = fast_gen_fib(1, 1, 100000);
  o.expect(q(1, 0) == g && q(0, 0) == g_next, "matrix power disagrees at n = 100000");
  std::printf("      F_1000000: %zu digits in %.3f s\n", decimal_digits(f.num()), elapsed);
}

void criterion_kernel_scale(Outcome& o) {
  for (int which = 1; which <= 3; ++which) {
    for (const auto& [r, s] : kGrid) {
      if (!in_domain(which, r)) continue;
      auto base = derive(r, s, pattern_of(which), Rational(1));
      for (long t : {2L, -3L}) {
        auto scaled = derive(r, s, pattern_of(which), Rational(t));
        o.expect(scaled.A == base.A && scaled.E == base.E,
                 "t=" + std::to_string(t) + " theorem " + std::to_string(which) + " r=" + std::to_string(r));
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Fibonacci corollary matrix power, n = 1..50", 1.0, criterion_g1},
      {2, "Jacobsthal corollary matrix power, n = 1..50", 1.0, criterion_g3},
      {3, "Pell corollary adjudicated by the derivation, n = 1..50", 0.0, criterion_g2},
      {4, "Theorems 1-3: mat_pow = closed power = closed form, n = 1..64", 5.0, criterion_theorems},
      {5, "Cassini n = 1..200, cross-checked with det(Q^n) = (-s)^n", 0.0, criterion_cassini},
      {6, "Cubic identity n = 2..100", 0.0, criterion_cubic},
      {7, "Binet = recurrence n = -10..100", 0.0, criterion_binet},
      {8, "Linear approximation in Q(sqrt D), n = 1..100", 0.0, criterion_linear},
      {9, "Projector algebra and spectral facts of every derived system", 0.0, criterion_projector},
      {10, "Performance: F_1000000 < 5 s, matrix power agreement at 100000", 0.0, criterion_performance},
      {11, "Kernel scale t in {1, 2, -3} leaves A and E unchanged", 0.0, criterion_kernel_scale},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
      outcome.ok = false;
      outcome.detail = "exceeded " + std::to_string(c.time_limit_s) + " s";
    }
    std::printf("%s [%2d] %s (%.3f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), elapsed,
                outcome.ok ? "" : ": ", outcome.detail.c_str());
    if (!outcome.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
