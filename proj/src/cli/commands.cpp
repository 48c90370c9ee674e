#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "horadam/cli.hpp"
#include "horadam/errors.hpp"

namespace horadam::cli {

namespace {

enum class Format { json, csv };

struct ParamFlags {
  std::optional<std::string> a, b, r, s;

  void attach(CLI::App* app, bool with_ab) {
    if (with_ab) {
      app->add_option("--a", a, "H_0 as a fraction string");
      app->add_option("--b", b, "H_1 as a fraction string");
    }
    app->add_option("--r", r, "r as a fraction string");
    app->add_option("--s", s, "s as a fraction string");
  }

  // Registry entry (if named) with explicit flags layered on top.
  RecurrenceParams resolve(const Registry& reg, const std::optional<std::string>& name) const {
    RecurrenceParams p = RecurrenceParams::generalized(1, 1);
    if (name) {
      const auto* e = reg.find(*name);
      if (!e) throw ParseError("unknown sequence name '" + *name + "'");
      p = e->params;
    } else if (!r || !s) {
      throw ParseError("give a sequence name or both --r and --s");
    }
    if (a) p.a = Rational::parse(*a);
    if (b) p.b = Rational::parse(*b);
    if (r) p.r = Rational::parse(*r);
    if (s) p.s = Rational::parse(*s);
    return p;
  }
};

struct Context {
  std::ostream& out;
  std::string registry_path;
  Format format = Format::json;
  Registry registry;
};

void add_format(CLI::App* app, Format& format) {
  app->add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}));
}

void emit(Context& ctx, const Json& record) { ctx.out << record.dump(2) << '\n'; }

std::int64_t parse_index(const std::string& text) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("malformed index '" + text + "'");
  }
}

const std::regex& range_regex() {
  static const std::regex re(R"(^\s*([+-]?\d+)\s*(?:\.\.\s*([+-]?\d+))?\s*$)");
  return re;
}

// ---------------------------------------------------------------- seq

struct SeqArgs {
  std::vector<std::string> positionals;
  std::optional<std::string> from, to;
  ParamFlags params;
};

bool use_fast_path(std::int64_t from, std::int64_t to) {
  if (from < 0 || to < 2) return false;
  auto count = static_cast<double>(to - from + 1);
  return count < std::log2(static_cast<double>(to));
}

Rational fast_horadam(const RecurrenceParams& p, std::int64_t n) {
  if (p.a.is_zero() && p.b == Rational(1)) return fast_gen_fib(p.r, p.s, static_cast<std::uint64_t>(n)).first;
  // (H_{n+1}, H_n) = Q^n (H_1, H_0)
  Mat2 q = mat_pow(companion(p.r, p.s), static_cast<std::uint64_t>(n));
  return q(1, 0) * p.b + q(1, 1) * p.a;
}

int cmd_seq(Context& ctx, const SeqArgs& args) {
  std::optional<std::string> name;
  std::optional<std::string> from = args.from, to = args.to;
  std::smatch m;
  for (const auto& pos : args.positionals) {
    if (std::regex_match(pos, m, range_regex())) {
      from = m[1].str();
      to = m[2].matched ? m[2].str() : m[1].str();
    } else if (!name) {
      name = pos;
    } else {
      throw ParseError("unexpected argument '" + pos + "'");
    }
  }
  if (!from || !to) throw ParseError("seq needs an index range, e.g. 0..10");
  std::int64_t lo = parse_index(*from), hi = parse_index(*to);
  if (lo > hi) throw ParseError("range start exceeds range end");
  RecurrenceParams p = args.params.resolve(ctx.registry, name);
  if (lo < 0 && p.s.is_zero()) throw BackwardExtensionError("negative indices need s != 0");

  std::vector<SeqValue> values;
  bool fast = use_fast_path(lo, hi);
  if (fast) {
    for (std::int64_t n = lo; n <= hi; ++n) values.push_back({n, fast_horadam(p, n)});
  } else {
    values = horadam_range(p, lo, hi);
  }

  if (ctx.format == Format::csv) {
    ctx.out << "index,value\n";
    for (const auto& v : values) ctx.out << v.index << ',' << v.value.str() << '\n';
    return kExitOk;
  }
  Json params = params_json(p);
  if (name) params["name"] = *name;
  params["from"] = lo;
  params["to"] = hi;
  Json results = Json::array();
  for (const auto& v : values) results.push_back({{"index", v.index}, {"value", v.value.str()}});
  emit(ctx, {{"command", "seq"}, {"params", params}, {"results", results},
             {"method", fast ? "fast-doubling" : "iterative"}});
  return kExitOk;
}

// ---------------------------------------------------------------- derive

struct DeriveArgs {
  ParamFlags params;
  std::optional<std::string> name;
  std::string pattern = "+-+";
  std::optional<std::int64_t> n;
  std::string t = "1";
};

int cmd_derive(Context& ctx, const DeriveArgs& args) {
  RecurrenceParams p = args.params.resolve(ctx.registry, args.name);
  KernelPattern pattern = KernelPattern::parse(args.pattern);
  Rational t = Rational::parse(args.t);
  DerivedSystem sys = derive(p.r, p.s, pattern, t);

  Json results = {{"A", matrix_json(sys.A)}, {"E", matrix_json(sys.E)}, {"validity", sys.validity}};
  if (auto which = pattern.theorem()) results["theorem"] = *which;

  std::optional<Mat3> closed, powered;
  if (args.n) {
    if (*args.n < 1) throw DomainError("--n must be >= 1");
    closed = closed_power(sys, *args.n);
    powered = mat_pow(sys.A, static_cast<std::uint64_t>(*args.n));
    results["power"] = {{"n", *args.n},
                        {"closed_power", matrix_json(*closed)},
                        {"mat_pow", matrix_json(*powered)},
                        {"equal", *closed == *powered}};
  }

  // Compare against the printed corollary matrix when the parameters match one.
  std::optional<IdentityReport> print_check;
  if (pattern == KernelPattern::theorem1() && t == Rational(1)) {
    for (const auto& entry : corollary_matrices()) {
      if (entry.params.r == p.r && entry.params.s == p.s) {
        print_check = check_corollary_print(entry.name, 50);
        results["printed_comparison"] = report_json(*print_check);
      }
    }
  }

  if (ctx.format == Format::csv) {
    ctx.out << "matrix,row,col,value\n";
    auto dump = [&](const std::string& label, const Mat3& m) {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ctx.out << label << ',' << i + 1 << ',' << j + 1 << ',' << m(i, j).str() << '\n';
    };
    dump("A", sys.A);
    dump("E", sys.E);
    if (closed) {
      dump("closed_power", *closed);
      dump("mat_pow", *powered);
    }
    return kExitOk;
  }
  Json params = params_json(p);
  params["pattern"] = pattern.str();
  params["t"] = t.str();
  if (args.n) params["n"] = *args.n;
  emit(ctx, {{"command", "derive"}, {"params", params}, {"results", results}});
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  bool defaults = false;
  std::optional<std::string> grid;
  std::vector<std::string> params;
  std::int64_t n_max = 64;
  unsigned workers = 0;
};

RecurrenceParams parse_pair(const Registry& reg, const std::string& item) {
  auto comma = item.find(',');
  if (comma == std::string::npos) {
    std::string trimmed = item;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    const auto* e = reg.find(trimmed);
    if (!e) throw ParseError("grid entry '" + item + "' is neither 'r,s' nor a registry name");
    return RecurrenceParams::generalized(e->params.r, e->params.s);
  }
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    return s;
  };
  return RecurrenceParams::generalized(Rational::parse(trim(item.substr(0, comma))),
                                       Rational::parse(trim(item.substr(comma + 1))));
}

// Grid spec: ';'-separated items, each "r,s" or a registry name. "" is the empty grid.
std::vector<RecurrenceParams> parse_grid(const Registry& reg, const std::string& spec) {
  std::vector<RecurrenceParams> grid;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    grid.push_back(parse_pair(reg, item));
  }
  return grid;
}

int cmd_verify(Context& ctx, const VerifyArgs& args) {
  if (args.n_max < 1) throw ParseError("--n-max must be >= 1");
  std::vector<RecurrenceParams> grid;
  bool explicit_grid = args.grid.has_value() || !args.params.empty();
  if (args.defaults || !explicit_grid) grid = default_grid();
  if (args.grid) {
    for (auto& p : parse_grid(ctx.registry, *args.grid)) grid.push_back(std::move(p));
  }
  for (const auto& item : args.params) grid.push_back(parse_pair(ctx.registry, item));

  auto reports = run_suite(grid, args.n_max, args.workers);
  bool failed = any_failure(reports);

  if (ctx.format == Format::csv) {
    ctx.out << "identity,r,s,lo,hi,status,fail_index,lhs,rhs,note\n";
    for (const auto& rep : reports) {
      ctx.out << rep.identity << ',' << rep.r.str() << ',' << rep.s.str() << ',' << rep.lo << ',' << rep.hi << ','
              << to_string(rep.status) << ',';
      if (rep.first_failure) {
        ctx.out << rep.first_failure->index << ',' << csv_escape(rep.first_failure->lhs) << ','
                << csv_escape(rep.first_failure->rhs);
      } else {
        ctx.out << ",,";
      }
      ctx.out << ',' << csv_escape(rep.note) << '\n';
    }
    return failed ? kExitVerifyFailure : kExitOk;
  }

  Json grid_json = Json::array();
  for (const auto& p : grid) grid_json.push_back({{"r", p.r.str()}, {"s", p.s.str()}});
  std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"skipped", 0}, {"discrepancy", 0}};
  Json results = Json::array();
  for (const auto& rep : reports) {
    ++counts[to_string(rep.status)];
    results.push_back(report_json(rep));
  }
  Json summary = {{"total", reports.size()},
                  {"pass", counts["pass"]},
                  {"fail", counts["fail"]},
                  {"skipped", counts["skipped"]},
                  {"discrepancy", counts["discrepancy"]}};
  emit(ctx, {{"command", "verify"},
             {"params", {{"n_max", args.n_max}, {"grid", grid_json}}},
             {"results", results},
             {"summary", summary}});
  return failed ? kExitVerifyFailure : kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::string> positionals;
  ParamFlags params;
  std::optional<std::string> n;
  std::optional<std::string> strategies;
  bool print_value = false;
};

const std::vector<std::string>& all_strategies() {
  static const std::vector<std::string> names = {"iterative", "matrix-pow", "fast-doubling"};
  return names;
}

std::optional<std::vector<std::string>> parse_strategies(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item == "*" || item == "all") return all_strategies();
    if (std::find(all_strategies().begin(), all_strategies().end(), item) == all_strategies().end()) {
      return std::nullopt;
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  return out;
}

Rational run_strategy(const std::string& strategy, const RecurrenceParams& p, std::int64_t n) {
  auto un = static_cast<std::uint64_t>(n);
  if (strategy == "iterative") return gen_fib(p.r, p.s, n);
  if (strategy == "matrix-pow") return mat_pow(companion(p.r, p.s), un)(1, 0);
  return fast_gen_fib(p.r, p.s, un).first;
}

int cmd_bench(Context& ctx, const BenchArgs& args) {
  std::optional<std::string> name;
  std::optional<std::string> n_text = args.n;
  std::optional<std::string> strategy_text = args.strategies;
  static const std::regex number(R"(^\d+$)");
  for (const auto& pos : args.positionals) {
    if (!n_text && std::regex_match(pos, number)) {
      n_text = pos;
    } else if (!strategy_text && parse_strategies(pos)) {
      strategy_text = pos;
    } else if (!name) {
      name = pos;
    } else {
      throw ParseError("unexpected argument '" + pos + "'");
    }
  }
  if (!n_text) throw ParseError("bench needs an index n");
  std::int64_t n = parse_index(*n_text);
  if (n < 1) throw ParseError("bench needs n >= 1");
  auto strategies = parse_strategies(strategy_text.value_or("fast-doubling"));
  if (!strategies) throw ParseError("unknown strategy in '" + *strategy_text + "'");
  if (strategies->empty()) throw ParseError("strategy list is empty");
  RecurrenceParams p = args.params.resolve(ctx.registry, name);

  struct Timing {
    std::string strategy;
    Rational value;
    std::int64_t micros;
  };
  std::vector<Timing> timings;
  for (const auto& strategy : *strategies) {
    auto start = std::chrono::steady_clock::now();
    Rational value = run_strategy(strategy, p, n);
    auto stop = std::chrono::steady_clock::now();
    timings.push_back(
        {strategy, std::move(value), std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count()});
  }
  bool agree = std::all_of(timings.begin(), timings.end(), [&](const Timing& t) { return t.value == timings.front().value; });
  const Rational& value = timings.front().value;
  std::size_t digits = decimal_digits(value.num());

  if (ctx.format == Format::csv) {
    ctx.out << "strategy,elapsed_us,digits,all_agree\n";
    for (const auto& t : timings) {
      ctx.out << t.strategy << ',' << t.micros << ',' << decimal_digits(t.value.num()) << ',' << (agree ? "true" : "false")
              << '\n';
    }
    return agree ? kExitOk : kExitVerifyFailure;
  }
  Json params = params_json(p);
  if (name) params["name"] = *name;
  params["n"] = n;
  Json per = Json::array();
  for (const auto& t : timings) {
    per.push_back({{"strategy", t.strategy},
                   {"elapsed_us", t.micros},
                   {"elapsed_ms", t.micros / 1000},
                   {"digits", decimal_digits(t.value.num())}});
  }
  Json results = {{"strategies", per}, {"all_agree", agree}, {"digits", digits}};
  if (!value.is_integer()) results["denominator_digits"] = decimal_digits(value.den());
  if (args.print_value) results["value"] = value.str();
  emit(ctx, {{"command", "bench"}, {"params", params}, {"results", results}});
  return agree ? kExitOk : kExitVerifyFailure;
}

// ---------------------------------------------------------------- registry

int cmd_registry_list(Context& ctx) {
  if (ctx.format == Format::csv) {
    ctx.out << "name,a,b,r,s,source\n";
    for (const auto& e : ctx.registry.entries()) {
      ctx.out << csv_escape(e.name) << ',' << e.params.a.str() << ',' << e.params.b.str() << ',' << e.params.r.str()
              << ',' << e.params.s.str() << ',' << (e.builtin ? "builtin" : "user") << '\n';
    }
    return kExitOk;
  }
  Json results = Json::array();
  for (const auto& e : ctx.registry.entries()) {
    Json obj = {{"name", e.name}};
    obj.update(params_json(e.params));
    obj["source"] = e.builtin ? "builtin" : "user";
    results.push_back(std::move(obj));
  }
  emit(ctx, {{"command", "registry list"}, {"params", {{"registry", ctx.registry_path}}}, {"results", results}});
  return kExitOk;
}

int cmd_registry_add(Context& ctx, const std::string& name, const ParamFlags& flags) {
  if (ctx.registry_path.empty()) {
    throw ParseError(std::string("registry add needs --registry or ") + kRegistryEnv);
  }
  if (name.empty()) throw ParseError("registry names must be nonempty");
  RegistryEntry entry{name, RecurrenceParams::generalized(1, 1), false};
  if (flags.a) entry.params.a = Rational::parse(*flags.a);
  if (flags.b) entry.params.b = Rational::parse(*flags.b);
  if (!flags.r || !flags.s) throw ParseError("registry add needs --r and --s");
  entry.params.r = Rational::parse(*flags.r);
  entry.params.s = Rational::parse(*flags.s);
  ctx.registry.add(entry);
  ctx.registry.save(ctx.registry_path);
  Json obj = {{"name", entry.name}};
  obj.update(params_json(entry.params));
  emit(ctx, {{"command", "registry add"}, {"params", {{"registry", ctx.registry_path}}}, {"results", obj}});
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Horadam / generalized Fibonacci toolkit", "horadam"};
  app.require_subcommand(1);

  Context ctx{out, {}, Format::json, Registry{}};
  std::optional<std::string> registry_flag;
  app.add_option("--registry", registry_flag, "registry JSON file")->expected(1);
  add_format(&app, ctx.format);

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "evaluate H_n over an index range");
  seq_cmd->add_option("args", seq.positionals, "[NAME] FROM..TO");
  seq_cmd->add_option("--from", seq.from);
  seq_cmd->add_option("--to", seq.to);
  seq.params.attach(seq_cmd, true);

  DeriveArgs der;
  auto* der_cmd = app.add_subcommand("derive", "derive the 3x3 matrix A and projector E");
  der_cmd->add_option("name", der.name, "registry name supplying r and s");
  der.params.attach(der_cmd, false);
  der_cmd->add_option("--pattern", der.pattern, "kernel sign pattern, e.g. +-+");
  der_cmd->add_option("--n", der.n, "also evaluate A^n both ways");
  der_cmd->add_option("--t", der.t, "kernel eigenvector scale");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "verify every identity over a parameter grid");
  ver_cmd->add_flag("--defaults", ver.defaults, "include the default grid");
  ver_cmd->add_option("--grid", ver.grid, "';'-separated 'r,s' pairs or registry names");
  ver_cmd->add_option("--params", ver.params, "one 'r,s' pair (repeatable)");
  ver_cmd->add_option("--n-max", ver.n_max, "largest index checked");
  ver_cmd->add_option("--workers", ver.workers, "worker threads (0 = hardware)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "time h_n under several strategies");
  bench_cmd->add_option("args", bench.positionals, "[NAME] N [STRATEGIES]");
  bench_cmd->add_option("--n", bench.n);
  bench_cmd->add_option("--strategies", bench.strategies, "iterative,matrix-pow,fast-doubling or *");
  bench_cmd->add_flag("--print-value", bench.print_value, "include h_n in the output");
  bench.params.attach(bench_cmd, false);

  auto* reg_cmd = app.add_subcommand("registry", "named sequences");
  reg_cmd->require_subcommand(1);
  auto* reg_list = reg_cmd->add_subcommand("list", "list known sequences");
  std::string add_name;
  ParamFlags add_flags;
  auto* reg_add = reg_cmd->add_subcommand("add", "add or replace a user sequence");
  reg_add->add_option("name", add_name)->required();
  add_flags.attach(reg_add, true);

  for (auto* sub : {seq_cmd, der_cmd, ver_cmd, bench_cmd, reg_list, reg_add}) {
    sub->add_option("--registry", registry_flag, "registry JSON file");
    add_format(sub, ctx.format);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (registry_flag) {
      ctx.registry_path = *registry_flag;
    } else if (const char* env = std::getenv(kRegistryEnv)) {
      ctx.registry_path = env;
    }
    if (!ctx.registry_path.empty()) ctx.registry.load(ctx.registry_path);

    if (seq_cmd->parsed()) return cmd_seq(ctx, seq);
    if (der_cmd->parsed()) return cmd_derive(ctx, der);
    if (ver_cmd->parsed()) return cmd_verify(ctx, ver);
    if (bench_cmd->parsed()) return cmd_bench(ctx, bench);
    if (reg_list->parsed()) return cmd_registry_list(ctx);
    if (reg_add->parsed()) return cmd_registry_add(ctx, add_name, add_flags);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace horadam::cli
