#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "horadam/rational.hpp"
#include "horadam/sequences.hpp"

namespace horadam {

enum class Status { pass, fail, skipped, discrepancy };

const char* to_string(Status status);

struct FirstFailure {
  std::int64_t index = 0;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one identity over one parameter pair and an index range.
/// pass and fail are decided by exact equality; fail carries the first
/// offending index with both sides rendered exactly. skipped marks a
/// parameter pair outside the identity's hypothesis; discrepancy is the
/// informational comparison against a printed matrix.
struct IdentityReport {
  std::string identity;
  Rational r;
  Rational s;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  Status status = Status::pass;
  std::optional<FirstFailure> first_failure;
  std::string note;
};

IdentityReport check_cassini(const Rational& r, const Rational& s, std::int64_t n_max);
/// det(companion_power_form(n)) == (-s)^n
IdentityReport check_cassini_matrix(const Rational& r, const Rational& s, std::int64_t n_max);
IdentityReport check_cubic(const Rational& r, const Rational& s, std::int64_t n_max);
IdentityReport check_binet(const Rational& r, const Rational& s, std::int64_t n_min, std::int64_t n_max);
IdentityReport check_linear_approx(const Rational& r, const Rational& s, std::int64_t n_max);
IdentityReport check_companion_power(const Rational& r, const Rational& s, std::int64_t n_max);
IdentityReport check_companion_decomposition(const Rational& r, const Rational& s, std::int64_t n_max);

/// mat_pow(theorem_matrix) == theorem_form == closed_power(derive(...)) for n in [1, n_max].
IdentityReport check_theorem_power(int which, const Rational& r, const Rational& s, std::int64_t n_max);
IdentityReport check_det_zero_power(int which, const Rational& r, const Rational& s, std::int64_t n_max);
/// E^2 = E, AE = EA = 0, det A = 0, trace A = r, A^3 = rA^2 + sA, eigen-residuals zero.
IdentityReport check_projector_algebra(int which, const Rational& r, const Rational& s);
/// derive(theorem pattern) reproduces the printed theorem matrix.
IdentityReport check_derivation_matches(int which, const Rational& r, const Rational& s);

/// Printed corollary matrices against the derivation; name in {fibonacci, pell, jacobsthal}.
IdentityReport check_corollary_print(const std::string& name, std::int64_t n_max);

/// Fibonacci, Pell, Jacobsthal, Balancing, then two seeded random integer pairs with D > 0.
std::vector<RecurrenceParams> default_grid();

/// The seed used for the random pairs of default_grid().
inline constexpr std::uint64_t kDefaultGridSeed = 20040101;

/// Every check over every grid entry plus the corollary presets, sorted by
/// (identity, r, s). Domain errors become skipped entries. Checks run on a
/// worker pool; the result order does not depend on scheduling.
std::vector<IdentityReport> run_suite(const std::vector<RecurrenceParams>& grid, std::int64_t n_max,
                                      unsigned workers = 0);

bool any_failure(const std::vector<IdentityReport>& reports);

}  // namespace horadam
