#include "horadam/derivation.hpp"

#include <algorithm>
#include <cctype>

namespace horadam {

KernelPattern KernelPattern::parse(std::string_view text) {
  if (text.size() != 3) throw ParseError("pattern must be three characters from {+,-}");
  std::array<int, 3> v{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (text[i] == '+') {
      v[i] = 1;
    } else if (text[i] == '-') {
      v[i] = -1;
    } else {
      throw ParseError("bad pattern character '" + std::string(1, text[i]) + "'");
    }
  }
  return {v[0], v[1], v[2]};
}

std::string KernelPattern::str() const {
  std::string out;
  for (int v : signs_) out.push_back(v > 0 ? '+' : '-');
  return out;
}

std::optional<int> KernelPattern::theorem() const {
  if (*this == theorem1()) return 1;
  if (*this == theorem2()) return 2;
  if (*this == theorem3()) return 3;
  return std::nullopt;
}

std::string theorem_validity(int which) {
  switch (which) {
    case 1:
    case 3:
      return "r != 0, r^2 + 4s > 0";
    case 2:
      return "r not in {0, 2}, r^2 + 4s > 0";
    default:
      throw DomainError("theorem must be 1, 2 or 3");
  }
}

void require_theorem_domain(int which, const Rational& r, const Rational& /*s*/) {
  bool ok = false;
  switch (which) {
    case 1:
    case 3:
      ok = !r.is_zero();
      break;
    case 2:
      ok = !r.is_zero() && r != Rational(2);
      break;
    default:
      throw DomainError("theorem must be 1, 2 or 3");
  }
  if (!ok) {
    throw DomainError("theorem " + std::to_string(which) + " requires " + theorem_validity(which) +
                      " (got r = " + r.str() + ")");
  }
}

DerivedSystem derive(const Rational& r, const Rational& s, KernelPattern pattern, const Rational& t) {
  auto [alpha, beta, field] = roots(r, s);
  auto which = pattern.theorem();
  if (which) require_theorem_domain(*which, r, s);
  if (t.is_zero()) throw DomainError("kernel scale t must be nonzero");

  const QuadElem minus_one(Rational(-1));
  std::array<QuadElem, 3> x{alpha, beta, minus_one};
  std::array<QuadElem, 3> y{beta, alpha, minus_one};
  std::array<QuadElem, 3> z;
  for (std::size_t i = 0; i < 3; ++i) z[i] = QuadElem(t * Rational(pattern.signs()[i]));

  QMat3 P = QMat3::from_columns({x, y, z});
  if (mat_det(P).is_zero()) {
    throw DegenerateEigenbasis("eigenvectors x, y, z are linearly dependent for pattern " +
                               pattern.str());
  }
  QMat3 P_inv = mat_inverse(P);

  // Row i of A solves row . P = (alpha x_i, beta y_i, 0).
  QMat3 A;
  for (std::size_t i = 0; i < 3; ++i) {
    std::array<QuadElem, 3> rhs{alpha * x[i], beta * y[i], QuadElem(0)};
    for (std::size_t j = 0; j < 3; ++j) {
      QuadElem acc = rhs[0] * P_inv(0, j);
      acc += rhs[1] * P_inv(1, j);
      acc += rhs[2] * P_inv(2, j);
      A(i, j) = std::move(acc);
    }
  }

  QMat3 kernel_part;
  kernel_part(2, 2) = QuadElem(1);
  QMat3 E = P * kernel_part * P_inv;

  DerivedSystem sys;
  sys.A = to_rational(A);
  sys.E = to_rational(E);
  sys.P = std::move(P);
  sys.r = r;
  sys.s = s;
  sys.t = t;
  sys.pattern = pattern;
  sys.validity = which ? theorem_validity(*which) : "r^2 + 4s > 0, det P != 0";
  sys.field = field;
  return sys;
}

Mat3 closed_power(const DerivedSystem& sys, std::int64_t n) {
  if (n < 1) throw DomainError("closed power needs n >= 1");
  auto [h_prev, h_n] = fast_gen_fib(sys.r, sys.s, static_cast<std::uint64_t>(n - 1));
  return sys.A * h_n + (Mat3::identity() - sys.E) * (sys.s * h_prev);
}

Mat3 theorem_matrix(int which, const Rational& r, const Rational& s) {
  require_theorem_domain(which, r, s);
  const Rational one(1);
  switch (which) {
    case 1:
      return Mat3{{r * (r - one) + s, s - r, -r * r}, {-s, -s, Rational(0)}, {one - r, one, r}} *
             (one / r);
    case 2:
      return Mat3{{r * (r - one) + s, r + s, r * r + Rational(2) * s},
                  {-s, -s, Rational(-2) * s},
                  {one - r, Rational(-1), -r}} *
             (one / (r - Rational(2)));
    default:
      return Mat3{{r * (r + one) + s, r + s, r * r}, {-s, -s, Rational(0)}, {-(r + one), Rational(-1), -r}} *
             (one / r);
  }
}

Mat3 theorem_form(int which, const Rational& r, const Rational& s, std::int64_t n) {
  require_theorem_domain(which, r, s);
  if (n < 1) throw DomainError("theorem forms hold for n >= 1");
  if (s.is_zero()) throw DomainError("theorem forms need s != 0");
  auto w = gen_fib_window(r, s, n - 2, 5);
  const Rational& hm2 = w[0];
  const Rational& hm1 = w[1];
  const Rational& h0 = w[2];
  const Rational& hp1 = w[3];
  const Rational& hp2 = w[4];
  const Rational one(1);
  switch (which) {
    case 1:
      return Mat3{{hp2 - hp1, -(hp1 - s * h0), -r * hp1},
                  {-s * (h0 - hm1), s * (hm1 - s * hm2), r * s * hm1},
                  {-(hp1 - h0), h0 - s * hm1, r * h0}} *
             (one / r);
    case 2:
      return Mat3{{hp2 - hp1, hp1 + s * h0, hp2 + s * h0},
                  {-s * (h0 - hm1), -s * (hm1 + s * hm2), -s * (h0 + s * hm2)},
                  {-(hp1 - h0), -(h0 + s * hm1), -(hp1 + s * hm1)}} *
             (one / (r - Rational(2)));
    default:
      return Mat3{{hp2 + hp1, hp1 + s * h0, r * hp1},
                  {-s * (h0 + hm1), -s * (hm1 + s * hm2), -r * s * hm1},
                  {-(hp1 + h0), -(h0 + s * hm1), -r * h0}} *
             (one / r);
  }
}

namespace {

struct Preset {
  const char* name;
  long r;
  long s;
};

constexpr Preset kCorollaryPresets[] = {{"fibonacci", 1, 1}, {"pell", 2, 1}, {"jacobsthal", 1, 2}};

Mat3 printed_matrix(std::string_view name) {
  if (name == "fibonacci") return Mat3{{1, 0, -1}, {-1, -1, 0}, {0, 1, 1}};
  if (name == "pell") return Mat3{{3, -1, -4}, {-1, -1, 0}, {0, 1, 2}} * Rational::normalize(1, 2);
  if (name == "jacobsthal") return Mat3{{2, 1, -1}, {-2, -2, 0}, {0, 1, 1}};
  throw DomainError("no corollary entry named '" + std::string(name) + "'");
}

}  // namespace

std::vector<CorollaryEntry> corollary_matrices() {
  std::vector<CorollaryEntry> out;
  for (const auto& p : kCorollaryPresets) {
    auto params = RecurrenceParams::generalized(Rational(p.r), Rational(p.s));
    auto sys = derive(params.r, params.s, KernelPattern::theorem1());
    out.push_back({p.name, params, sys.A, printed_matrix(p.name)});
  }
  return out;
}

Mat3 corollary_printed_power(std::string_view name, std::int64_t n) {
  if (n < 1) throw DomainError("corollary identities hold for n >= 1");
  const auto* preset = std::find_if(std::begin(kCorollaryPresets), std::end(kCorollaryPresets),
                                    [&](const Preset& p) { return name == p.name; });
  if (preset == std::end(kCorollaryPresets)) {
    throw DomainError("no corollary entry named '" + std::string(name) + "'");
  }
  auto w = gen_fib_window(Rational(preset->r), Rational(preset->s), n - 3, 6);
  auto h = [&](std::int64_t k) -> const Rational& { return w[static_cast<std::size_t>(k - (n - 3))]; };
  const Rational two(2);
  if (name == "fibonacci") {
    return Mat3{{h(n), -h(n - 1), -h(n + 1)},
                {-h(n - 2), h(n - 3), h(n - 1)},
                {-h(n - 1), h(n - 2), h(n)}};
  }
  if (name == "pell") {
    return Mat3{{h(n + 2) - h(n + 1), -(h(n + 1) - h(n)), -two * h(n + 1)},
                {-(h(n) - h(n - 1)), h(n - 1) - h(n - 2), two * h(n - 1)},
                {-(h(n + 1) - h(n)), h(n) - h(n - 1), h(n)}} *
           Rational::normalize(1, 2);
  }
  return Mat3{{two * h(n), -(h(n + 1) - two * h(n)), -h(n + 1)},
              {Rational(-4) * h(n - 2), two * (h(n - 1) - two * h(n - 2)), two * h(n - 1)},
              {-two * h(n - 1), h(n) - two * h(n - 1), h(n)}};
}

std::vector<EntryMismatch> corollary_discrepancies(const CorollaryEntry& entry, std::int64_t n_max) {
  std::vector<EntryMismatch> out;
  auto compare = [&](const char* where, std::int64_t n, const Mat3& printed, const Mat3& derived) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (printed(i, j) != derived(i, j)) out.push_back({where, n, i, j, printed(i, j), derived(i, j)});
  };
  compare("matrix", 0, entry.printed_matrix, entry.derived);
  Mat3 power = entry.derived;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (n > 1) power = power * entry.derived;
    compare("power", n, corollary_printed_power(entry.name, n), power);
  }
  return out;
}

}  // namespace horadam
