#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/matrix.hpp"
#include "horadam/sequences.hpp"

namespace horadam {

/// Sign triple of the kernel eigenvector z = t * signs.
class KernelPattern {
 public:
  constexpr KernelPattern() = default;
  constexpr KernelPattern(int s1, int s2, int s3) : signs_{s1, s2, s3} {
    for (int v : signs_) {
      if (v != 1 && v != -1) throw ParseError("kernel signs must be +1 or -1");
    }
  }

  static constexpr KernelPattern theorem1() { return {1, -1, 1}; }
  static constexpr KernelPattern theorem2() { return {1, 1, -1}; }
  static constexpr KernelPattern theorem3() { return {-1, 1, 1}; }

  /// Three characters from {+, -}, e.g. "+-+".
  static KernelPattern parse(std::string_view text);

  const std::array<int, 3>& signs() const { return signs_; }
  std::string str() const;

  /// 1, 2 or 3 when this is one of the three published patterns.
  std::optional<int> theorem() const;

  friend constexpr bool operator==(const KernelPattern&, const KernelPattern&) = default;

 private:
  std::array<int, 3> signs_{1, -1, 1};
};

/// The 3x3 matrix with eigenpairs (alpha, x), (beta, y), (0, z) and its projector.
struct DerivedSystem {
  Mat3 A;
  Mat3 E;   // P diag(0, 0, 1) P^-1
  QMat3 P;  // columns x = (alpha, beta, -1), y = (beta, alpha, -1), z
  Rational r;
  Rational s;
  Rational t{1};
  KernelPattern pattern;
  std::string validity;
  FieldPtr field;
};

/**
 * Solves, row by row, row_i . x = alpha x_i, row_i . y = beta y_i,
 * row_i . z = 0 over Q(sqrt D) and checks that every entry of A is rational.
 *
 * Errors: OutOfHypothesis (D <= 0), DomainError (published pattern outside its
 * validity domain), DegenerateEigenbasis (det P = 0), PatternNotSupported
 * (irrational entries), DivisionByZero (t = 0).
 */
DerivedSystem derive(const Rational& r, const Rational& s, KernelPattern pattern,
                     const Rational& t = Rational(1));

inline const Mat3& projector(const DerivedSystem& sys) { return sys.E; }

/// h_n A + s h_{n-1} (I - E); n >= 1.
Mat3 closed_power(const DerivedSystem& sys, std::int64_t n);

/// Validity domain text and check for theorem 1, 2 or 3.
std::string theorem_validity(int which);
void require_theorem_domain(int which, const Rational& r, const Rational& s);

/// The published matrix A of theorem 1, 2 or 3.
Mat3 theorem_matrix(int which, const Rational& r, const Rational& s);

/// The published closed form of A^n for theorem 1, 2 or 3, built from h_{n-2} .. h_{n+2}.
Mat3 theorem_form(int which, const Rational& r, const Rational& s, std::int64_t n);

struct CorollaryEntry {
  std::string name;
  RecurrenceParams params;
  Mat3 derived;          // derive(r, s, theorem1 pattern).A
  Mat3 printed_matrix;   // the matrix as printed in the corollary
};

/// Fibonacci, Pell and Jacobsthal instantiations of the theorem-1 construction.
std::vector<CorollaryEntry> corollary_matrices();

/// Right-hand side of the printed corollary identity for `name` at index n.
Mat3 corollary_printed_power(std::string_view name, std::int64_t n);

struct EntryMismatch {
  std::string where;  // "matrix" or "power"
  std::int64_t n = 0; // 0 for the matrix itself
  std::size_t row = 0;
  std::size_t col = 0;
  Rational printed;
  Rational derived;
};

/// Every entry where the printed corollary disagrees with the derivation, for n in [1, n_max].
std::vector<EntryMismatch> corollary_discrepancies(const CorollaryEntry& entry, std::int64_t n_max);

}  // namespace horadam
