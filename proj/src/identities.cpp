#include "horadam/identities.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "horadam/derivation.hpp"
#include "horadam/errors.hpp"
#include "horadam/matrix.hpp"

namespace horadam {

const char* to_string(Status status) {
  switch (status) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
    case Status::discrepancy:
      return "discrepancy";
  }
  return "unknown";
}

namespace {

template <class M>
std::string render_matrix(const M& m) {
  std::string out = "[";
  auto rows = m.to_strings();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j) out += (j ? "," : "") + rows[i][j];
    out += "]";
  }
  return out + "]";
}

IdentityReport make_report(std::string name, const Rational& r, const Rational& s, std::int64_t lo,
                           std::int64_t hi) {
  IdentityReport rep;
  rep.identity = std::move(name);
  rep.r = r;
  rep.s = s;
  rep.lo = lo;
  rep.hi = hi;
  return rep;
}

// Runs probe(n) for n in [lo, hi] and stops at the first failure.
IdentityReport sweep(IdentityReport rep, const std::function<std::optional<FirstFailure>(std::int64_t)>& probe) {
  for (std::int64_t n = rep.lo; n <= rep.hi; ++n) {
    if (auto failure = probe(n)) {
      rep.status = Status::fail;
      rep.first_failure = std::move(failure);
      return rep;
    }
  }
  rep.status = Status::pass;
  return rep;
}

template <class X>
std::optional<FirstFailure> expect_equal(std::int64_t n, const X& lhs, const X& rhs) {
  if (lhs == rhs) return std::nullopt;
  if constexpr (std::is_same_v<X, Rational>) {
    return FirstFailure{n, lhs.str(), rhs.str()};
  } else {
    return FirstFailure{n, render_matrix(lhs), render_matrix(rhs)};
  }
}

std::string theorem_suffix(int which) { return "_theorem" + std::to_string(which); }

KernelPattern pattern_for(int which) {
  switch (which) {
    case 1:
      return KernelPattern::theorem1();
    case 2:
      return KernelPattern::theorem2();
    case 3:
      return KernelPattern::theorem3();
    default:
      throw DomainError("theorem must be 1, 2 or 3");
  }
}

// h_lo .. h_hi as a lookup by index.
struct Terms {
  std::int64_t first;
  std::vector<Rational> values;
  const Rational& operator()(std::int64_t k) const { return values[static_cast<std::size_t>(k - first)]; }
};

Terms terms(const Rational& r, const Rational& s, std::int64_t lo, std::int64_t hi) {
  Terms t{lo, {}};
  for (auto& v : horadam_range(RecurrenceParams::generalized(r, s), lo, hi)) t.values.push_back(std::move(v.value));
  return t;
}

}  // namespace

IdentityReport check_cassini(const Rational& r, const Rational& s, std::int64_t n_max) {
  auto rep = make_report("cassini", r, s, 1, n_max);
  auto h = terms(r, s, 0, std::max<std::int64_t>(n_max + 1, 1));
  Rational minus_s = -s;
  return sweep(std::move(rep), [&](std::int64_t n) {
    return expect_equal(n, h(n) * h(n) - h(n - 1) * h(n + 1), minus_s.pow(n - 1));
  });
}

IdentityReport check_cassini_matrix(const Rational& r, const Rational& s, std::int64_t n_max) {
  auto rep = make_report("cassini_matrix", r, s, 1, n_max);
  Rational minus_s = -s;
  return sweep(std::move(rep), [&](std::int64_t n) {
    return expect_equal(n, mat_det(companion_power_form(r, s, n)), minus_s.pow(n));
  });
}

IdentityReport check_cubic(const Rational& r, const Rational& s, std::int64_t n_max) {
  auto rep = make_report("cubic", r, s, 2, n_max);
  auto h = terms(r, s, 0, std::max<std::int64_t>(n_max + 2, 2));
  return sweep(std::move(rep), [&](std::int64_t n) {
    Rational lhs = h(n) * h(n) * h(n) + h(n - 1) * h(n - 1) * h(n + 2) + h(n + 1) * h(n + 1) * h(n - 2);
    Rational rhs = h(n) * (h(n - 2) * h(n + 2) + Rational(2) * h(n - 1) * h(n + 1));
    return expect_equal(n, lhs, rhs);
  });
}

IdentityReport check_binet(const Rational& r, const Rational& s, std::int64_t n_min, std::int64_t n_max) {
  if (s.is_zero() && n_min < 0) n_min = 0;
  auto rep = make_report("binet", r, s, n_min, n_max);
  roots(r, s);  // hypothesis check before any work
  if (n_min > n_max) return rep;
  auto h = terms(r, s, n_min, n_max);
  return sweep(std::move(rep), [&](std::int64_t n) { return expect_equal(n, binet_eval(r, s, n), h(n)); });
}

IdentityReport check_linear_approx(const Rational& r, const Rational& s, std::int64_t n_max) {
  auto rep = make_report("linear_approx", r, s, 1, n_max);
  auto rts = roots(r, s);
  auto h = terms(r, s, 0, std::max<std::int64_t>(n_max, 1));
  return sweep(std::move(rep), [&](std::int64_t n) -> std::optional<FirstFailure> {
    if (linear_approx_check(r, s, n)) return std::nullopt;
    auto e = static_cast<std::uint64_t>(n);
    QuadElem tail(s * h(n - 1));
    return FirstFailure{n,
                        quad_pow(rts.alpha, e).str() + " ; " + quad_pow(rts.beta, e).str(),
                        (rts.alpha * QuadElem(h(n)) + tail).str() + " ; " +
                            (rts.beta * QuadElem(h(n)) + tail).str()};
  });
}

IdentityReport check_companion_power(const Rational& r, const Rational& s, std::int64_t n_max) {
  auto rep = make_report("companion_power", r, s, 1, n_max);
  Mat2 q = companion(r, s);
  return sweep(std::move(rep), [&](std::int64_t n) {
    return expect_equal(n, mat_pow(q, static_cast<std::uint64_t>(n)), companion_power_form(r, s, n));
  });
}

IdentityReport check_companion_decomposition(const Rational& r, const Rational& s, std::int64_t n_max) {
  auto rep = make_report("companion_decomposition", r, s, 1, n_max);
  Mat2 q = companion(r, s);
  auto h = terms(r, s, 0, std::max<std::int64_t>(n_max, 1));
  return sweep(std::move(rep), [&](std::int64_t n) {
    return expect_equal(n, mat_pow(q, static_cast<std::uint64_t>(n)),
                        q * h(n) + Mat2::identity() * (s * h(n - 1)));
  });
}

IdentityReport check_theorem_power(int which, const Rational& r, const Rational& s, std::int64_t n_max) {
  auto rep = make_report("theorem_power" + theorem_suffix(which), r, s, 1, n_max);
  Mat3 a = theorem_matrix(which, r, s);
  if (s.is_zero()) throw DomainError("theorem forms need s != 0");
  auto sys = derive(r, s, pattern_for(which));
  return sweep(std::move(rep), [&](std::int64_t n) -> std::optional<FirstFailure> {
    Mat3 power = mat_pow(a, static_cast<std::uint64_t>(n));
    if (auto f = expect_equal(n, power, theorem_form(which, r, s, n))) return f;
    return expect_equal(n, power, closed_power(sys, n));
  });
}

IdentityReport check_det_zero_power(int which, const Rational& r, const Rational& s, std::int64_t n_max) {
  auto rep = make_report("det_zero_power" + theorem_suffix(which), r, s, 1, n_max);
  Mat3 a = theorem_matrix(which, r, s);
  return sweep(std::move(rep), [&](std::int64_t n) {
    return expect_equal(n, mat_det(mat_pow(a, static_cast<std::uint64_t>(n))), Rational(0));
  });
}

IdentityReport check_projector_algebra(int which, const Rational& r, const Rational& s) {
  auto rep = make_report("projector_algebra" + theorem_suffix(which), r, s, 0, 0);
  auto sys = derive(r, s, pattern_for(which));
  const Mat3& a = sys.A;
  const Mat3& e = sys.E;
  const Mat3 zero;
  auto fail = [&](const std::string& what, const std::string& lhs, const std::string& rhs) {
    rep.status = Status::fail;
    rep.first_failure = FirstFailure{0, lhs, rhs};
    rep.note = what;
    return rep;
  };
  if (e * e != e) return fail("E^2 = E", render_matrix(e * e), render_matrix(e));
  if (!(a * e).is_zero()) return fail("A E = 0", render_matrix(a * e), render_matrix(zero));
  if (!(e * a).is_zero()) return fail("E A = 0", render_matrix(e * a), render_matrix(zero));
  if (!mat_det(a).is_zero()) return fail("det A = 0", mat_det(a).str(), "0");
  if (a.trace() != r) return fail("trace A = r", a.trace().str(), r.str());
  Mat3 a2 = a * a;
  if (a2 * a != a2 * r + a * s) return fail("A^3 = r A^2 + s A", render_matrix(a2 * a), render_matrix(a2 * r + a * s));
  QMat3 aq = to_quad(a);
  auto [alpha, beta, field] = roots(r, s);
  auto x = sys.P.column(0);
  auto y = sys.P.column(1);
  auto z = sys.P.column(2);
  auto ax = aq * x;
  auto ay = aq * y;
  auto az = aq * z;
  for (std::size_t i = 0; i < 3; ++i) {
    if (ax[i] != alpha * x[i]) return fail("A x = alpha x", ax[i].str(), (alpha * x[i]).str());
    if (ay[i] != beta * y[i]) return fail("A y = beta y", ay[i].str(), (beta * y[i]).str());
    if (!az[i].is_zero()) return fail("A z = 0", az[i].str(), "0");
  }
  rep.status = Status::pass;
  return rep;
}

IdentityReport check_derivation_matches(int which, const Rational& r, const Rational& s) {
  auto rep = make_report("derivation_matches" + theorem_suffix(which), r, s, 0, 0);
  Mat3 printed = theorem_matrix(which, r, s);
  Mat3 derived = derive(r, s, pattern_for(which)).A;
  if (auto f = expect_equal<Mat3>(0, derived, printed)) {
    rep.status = Status::fail;
    rep.first_failure = std::move(f);
  }
  return rep;
}

IdentityReport check_corollary_print(const std::string& name, std::int64_t n_max) {
  auto entries = corollary_matrices();
  auto it = std::find_if(entries.begin(), entries.end(), [&](const CorollaryEntry& e) { return e.name == name; });
  if (it == entries.end()) throw DomainError("no corollary entry named '" + name + "'");
  auto rep = make_report("corollary_print_" + name, it->params.r, it->params.s, 1, n_max);
  auto mismatches = corollary_discrepancies(*it, n_max);
  if (mismatches.empty()) return rep;

  rep.status = Status::discrepancy;
  const auto& first = mismatches.front();
  rep.first_failure = FirstFailure{first.n, first.printed.str(), first.derived.str()};
  // Group by (where, row, col): n-range of each differing entry.
  std::map<std::tuple<std::string, std::size_t, std::size_t>, std::pair<std::int64_t, std::int64_t>> spans;
  for (const auto& m : mismatches) {
    auto key = std::make_tuple(m.where, m.row, m.col);
    auto [pos, inserted] = spans.try_emplace(key, m.n, m.n);
    if (!inserted) pos->second.second = m.n;
  }
  std::ostringstream note;
  bool first_item = true;
  for (const auto& [key, span] : spans) {
    const auto& [where, row, col] = key;
    note << (first_item ? "" : "; ") << "printed " << where << " entry (" << row + 1 << "," << col + 1 << ")";
    if (where == "power") note << " differs for n in [" << span.first << "," << span.second << "]";
    else note << " differs";
    first_item = false;
  }
  note << "; first: " << (first.where == "matrix" ? "matrix" : "power n=" + std::to_string(first.n))
       << " printed " << first.printed << " vs derived " << first.derived;
  rep.note = note.str();
  return rep;
}

std::vector<RecurrenceParams> default_grid() {
  std::vector<RecurrenceParams> grid = {
      RecurrenceParams::generalized(1, 1),
      RecurrenceParams::generalized(2, 1),
      RecurrenceParams::generalized(1, 2),
      RecurrenceParams::generalized(6, -1),
  };
  std::mt19937_64 rng(kDefaultGridSeed);
  while (grid.size() < 6) {
    long r = 1 + static_cast<long>(rng() % 9);
    long s = static_cast<long>(rng() % 11) - 5;
    auto p = RecurrenceParams::generalized(r, s);
    if (s == 0 || p.discriminant().sign() <= 0) continue;
    if (std::find(grid.begin(), grid.end(), p) != grid.end()) continue;
    grid.push_back(p);
  }
  return grid;
}

namespace {

struct Task {
  std::string identity;
  Rational r;
  Rational s;
  std::int64_t lo;
  std::int64_t hi;
  std::function<IdentityReport()> run;
};

IdentityReport execute(const Task& task) {
  try {
    return task.run();
  } catch (const Error& e) {
    auto rep = make_report(task.identity, task.r, task.s, task.lo, task.hi);
    rep.status = Status::skipped;
    rep.note = e.what();
    return rep;
  }
}

}  // namespace

std::vector<IdentityReport> run_suite(const std::vector<RecurrenceParams>& grid, std::int64_t n_max,
                                      unsigned workers) {
  std::vector<Task> tasks;
  auto add = [&](std::string name, const Rational& r, const Rational& s, std::int64_t lo, std::int64_t hi,
                 std::function<IdentityReport()> fn) {
    tasks.push_back({std::move(name), r, s, lo, hi, std::move(fn)});
  };

  std::vector<std::pair<Rational, Rational>> seen;
  for (const auto& p : grid) {
    std::pair<Rational, Rational> key{p.r, p.s};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    const Rational r = p.r;
    const Rational s = p.s;
    add("cassini", r, s, 1, n_max, [=] { return check_cassini(r, s, n_max); });
    add("cassini_matrix", r, s, 1, n_max, [=] { return check_cassini_matrix(r, s, n_max); });
    add("cubic", r, s, 2, n_max, [=] { return check_cubic(r, s, n_max); });
    add("binet", r, s, -10, n_max, [=] { return check_binet(r, s, -10, n_max); });
    add("linear_approx", r, s, 1, n_max, [=] { return check_linear_approx(r, s, n_max); });
    add("companion_power", r, s, 1, n_max, [=] { return check_companion_power(r, s, n_max); });
    add("companion_decomposition", r, s, 1, n_max, [=] { return check_companion_decomposition(r, s, n_max); });
    for (int which = 1; which <= 3; ++which) {
      auto suffix = theorem_suffix(which);
      add("theorem_power" + suffix, r, s, 1, n_max, [=] { return check_theorem_power(which, r, s, n_max); });
      add("det_zero_power" + suffix, r, s, 1, n_max, [=] { return check_det_zero_power(which, r, s, n_max); });
      add("projector_algebra" + suffix, r, s, 0, 0, [=] { return check_projector_algebra(which, r, s); });
      add("derivation_matches" + suffix, r, s, 0, 0, [=] { return check_derivation_matches(which, r, s); });
    }
  }
  for (const auto& entry : corollary_matrices()) {
    std::pair<Rational, Rational> key{entry.params.r, entry.params.s};
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) continue;
    std::string name = entry.name;
    add("corollary_print_" + name, entry.params.r, entry.params.s, 1, n_max,
        [=] { return check_corollary_print(name, n_max); });
  }

  std::vector<IdentityReport> reports(tasks.size());
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) reports[i] = execute(tasks[i]);
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::stable_sort(reports.begin(), reports.end(), [](const IdentityReport& a, const IdentityReport& b) {
    return std::tie(a.identity, a.r, a.s) < std::tie(b.identity, b.r, b.s);
  });
  return reports;
}

bool any_failure(const std::vector<IdentityReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const IdentityReport& r) { return r.status == Status::fail; });
}

}  // namespace horadam
