#include "lcv/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lcv/egf.hpp"
#include "lcv/errors.hpp"
#include "lcv/golden.hpp"
#include "lcv/oracles.hpp"
#include "lcv/parallel.hpp"
#include "lcv/positivity.hpp"
#include "lcv/series.hpp"
#include "lcv/version.hpp"

namespace lcv::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct SuiteInfo {
  Suite suite;
  std::string_view name;
};

constexpr SuiteInfo kSuites[] = {
    {Suite::LogConcave, "log-concave"},
    {Suite::KLogConcave, "k-log-concave"},
    {Suite::InfLogConcave, "inf-log-concave"},
    {Suite::QLogConvex, "q-log-convex"},
    {Suite::QLogConcave, "q-log-concave"},
    {Suite::StrongQLogConvex, "strong-q-log-convex"},
    {Suite::StrongQLogConcave, "strong-q-log-concave"},
    {Suite::KQLogConvex, "k-q-log-convex"},
    {Suite::OrderKLogConcave, "order-k-log-concave"},
    {Suite::InfQLogConvex, "inf-q-log-convex"},
    {Suite::InfOrderLogConcave, "inf-order-log-concave"},
};

int lowest_n(FamilyId family) { return family == FamilyId::BorosMoll ? 0 : 1; }

void check_cap(FamilyId family, int n_max, bool allow_large) {
  if (n_max > default_cap(family) && !allow_large) {
    throw CapExceeded("n-max " + std::to_string(n_max) + " exceeds the default cap " +
                      std::to_string(default_cap(family)) + " for " +
                      std::string(family_name(family)) + "; pass --allow-large to override");
  }
}

std::vector<RatPolynomial> family_sequence(FamilyId family, int n_max, const FamilyOptions& options,
                                           const FamilyCache* cache) {
  if (family == FamilyId::BorosMoll) return boros_moll_polynomials(n_max);
  std::vector<RatPolynomial> out{RatPolynomial()};  // placeholder for n = 0
  for (const auto& p : load_or_compute(family, n_max, options, cache)) out.push_back(to_rational(p));
  return out;
}

Verdict run_row_suite(Suite suite, const NumberSequence& row, int depth) {
  switch (suite) {
    case Suite::LogConcave:
      return k_log_concave(row, 1);
    case Suite::KLogConcave:
      return k_log_concave(row, depth);
    case Suite::InfLogConcave:
      return infinity_log_concave(row, depth);
    default:
      break;
  }
  throw ContractError("not a row suite");
}

Verdict run_window_suite(Suite suite, const PolySequence& ps, int depth) {
  switch (suite) {
    case Suite::QLogConvex:
      return q_log_convex(ps);
    case Suite::QLogConcave:
      return q_log_concave_seq(ps);
    case Suite::StrongQLogConvex:
      return strong_q_log_convex(ps);
    case Suite::StrongQLogConcave:
      return strong_q_log_concave(ps);
    case Suite::KQLogConvex:
      return k_q_log_convex(ps, depth);
    case Suite::OrderKLogConcave:
      return log_concave_of_order_k(ps, depth);
    case Suite::InfQLogConvex:
      return infinity_q_log_convex(ps, depth);
    case Suite::InfOrderLogConcave:
      return infinity_order_log_concave(ps, depth);
    default:
      break;
  }
  throw ContractError("not a window suite");
}

struct Options {
  std::string family;
  std::string suite;
  std::string format = "text";
  std::string route = "rational";
  std::string cache_dir;
  std::string golden_file;
  std::string kernel;
  std::optional<int> n_max;
  std::optional<int> n_min;
  std::optional<int> depth;
  std::vector<int> sizes;
  std::optional<int> order;
  int jobs = 1;
  bool allow_large = false;
  bool errata = false;
  bool timings = false;
};

FamilyId require_family(const Options& o) {
  if (o.family.empty()) throw DomainError("--family is required");
  auto f = parse_family(o.family);
  if (!f) throw DomainError("unknown family '" + o.family + "' (lis, matching, boros-moll)");
  return *f;
}

Format require_format(const Options& o) {
  auto f = parse_format(o.format);
  if (!f) throw DomainError("unknown format '" + o.format + "' (text, json, csv)");
  return *f;
}

FamilyOptions family_options(const Options& o) {
  FamilyOptions fo;
  if (o.route == "rational") {
    fo.route = Route::Rational;
  } else if (o.route == "egf") {
    fo.route = Route::Exponential;
  } else {
    throw DomainError("unknown route '" + o.route + "' (rational, egf)");
  }
  fo.jobs = std::max(1, o.jobs);
  return fo;
}

std::optional<FamilyCache> cache_of(const Options& o) {
  return FamilyCache::resolve(o.cache_dir.empty() ? std::nullopt
                                                  : std::optional<std::string>(o.cache_dir));
}

int cmd_compute(const Options& o, std::ostream& out) {
  const FamilyId family = require_family(o);
  const Format format = require_format(o);
  const int n_max = o.n_max.value_or(10);
  if (n_max < lowest_n(family)) throw DomainError("--n-max is below the family's first index");
  check_cap(family, n_max, o.allow_large);
  if (family == FamilyId::BorosMoll) {
    render_rows(family, rows_of(boros_moll_polynomials(n_max)), format, out);
    return kExitHolds;
  }
  const auto cache = cache_of(o);
  const auto polys = load_or_compute(family, n_max, family_options(o), cache ? &*cache : nullptr);
  render_rows(family, rows_of(family, polys), format, out);
  return kExitHolds;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyRequest req;
  req.family = require_family(o);
  const Format format = require_format(o);
  if (o.suite.empty()) throw DomainError("--suite is required");
  auto suite = parse_suite(o.suite);
  if (!suite) throw DomainError("unknown suite '" + o.suite + "'");
  req.suite = *suite;
  req.n_min = o.n_min.value_or(lowest_n(req.family));
  req.n_max = o.n_max.value_or(default_cap(req.family));
  req.depth = o.depth;
  req.options = family_options(o);
  check_cap(req.family, req.n_max, o.allow_large);
  const auto cache = cache_of(o);
  req.cache = cache ? &*cache : nullptr;

  const Report report = verify(req);
  render_report(report, format, o.timings, out);
  return report.all_hold() ? kExitHolds : kExitCounterexample;
}

int cmd_golden_diff(const Options& o, std::ostream& out) {
  const FamilyId family = require_family(o);
  const Format format = require_format(o);
  golden::GoldenTable table;
  if (!o.golden_file.empty()) {
    std::ifstream in(o.golden_file);
    if (!in) throw DomainError("cannot read golden file " + o.golden_file);
    std::stringstream buf;
    buf << in.rdbuf();
    table = golden::parse_table(family, buf.str());
  } else {
    table = golden::embedded_table(family);
  }
  const int n_max = golden::max_row(table);
  if (n_max < 1) throw DomainError("golden table is empty");
  check_cap(family, n_max, o.allow_large);
  const auto computed = family == FamilyId::Lis ? lis_polynomials(n_max, family_options(o))
                                                : matching_polynomials(n_max, family_options(o));
  const auto result = golden::diff(table, computed);
  render_golden_diff(result, o.errata, format, out);
  if (result.exact()) return kExitHolds;
  if (o.errata && result.all_certified_misprints()) return kExitHolds;
  return kExitCounterexample;
}

int cmd_oracle_check(const Options& o, std::ostream& out) {
  const FamilyId family = require_family(o);
  const Format format = require_format(o);
  if (family == FamilyId::BorosMoll) throw DomainError("oracle-check supports lis and matching");
  const int cap = family == FamilyId::Lis ? kPermutationOracleCap : kMatchingOracleCap;
  const int n_max = o.n_max.value_or(cap);
  if (n_max < 1) throw DomainError("--n-max must be at least 1");
  if (n_max > cap && !o.allow_large) {
    throw CapExceeded("oracle-check is capped at n = " + std::to_string(cap) +
                      "; pass --allow-large to override");
  }
  const auto polys = family == FamilyId::Lis ? lis_polynomials(n_max, family_options(o))
                                             : matching_polynomials(n_max, family_options(o));
  std::vector<OracleComparison> rows;
  bool all = true;
  for (int n = 1; n <= n_max; ++n) {
    OracleComparison c;
    c.n = n;
    c.oracle = family == FamilyId::Lis ? perm_lis_histogram(n, o.allow_large, o.jobs)
                                       : matching_crossing_histogram(n, o.allow_large, o.jobs);
    const IntPolynomial& p = polys[n - 1];
    Histogram from_poly;
    for (int k = 1; k <= p.degree(); ++k) {
      c.polynomial.push_back(p.coeff(k).get_str());
      if (p.coeff(k) != 0) from_poly[k] = p.coeff(k);
    }
    c.matches = from_poly == c.oracle;
    all = all && c.matches;
    rows.push_back(std::move(c));
  }
  render_oracle_check(family, rows, format, out);
  return all ? kExitHolds : kExitCounterexample;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const FamilyOptions fo = family_options(o);
  if (o.kernel == "determinant") {
    const std::vector<int> sizes = o.sizes.empty() ? std::vector<int>{10} : o.sizes;
    out << "bench kernel=determinant route=" << o.route << '\n';
    for (int k : sizes) {
      if (k < 1) throw DomainError("determinant size must be at least 1");
      const int order = o.order.value_or(2 * k);
      const auto start = Clock::now();
      if (fo.route == Route::Rational) {
        (void)lis_determinant(k, order);
      } else {
        auto binomials = std::make_shared<const BinomialTable>(order);
        Matrix<EgfSeries> m(static_cast<std::size_t>(k));
        for (int i = 1; i <= k; ++i) {
          for (int j = 1; j <= k; ++j) m[i - 1].push_back(egf_bessel(i - j, binomials));
        }
        (void)egf_determinant(m, binomials);
      }
      out << "size=" << k << " order=" << order << " seconds=" << seconds_since(start) << '\n';
    }
    return kExitHolds;
  }
  if (o.kernel == "family") {
    const FamilyId family = require_family(o);
    const std::vector<int> sizes = o.sizes.empty() ? std::vector<int>{o.n_max.value_or(18)} : o.sizes;
    out << "bench kernel=family family=" << family_name(family) << " route=" << o.route << '\n';
    for (int n : sizes) {
      check_cap(family, n, o.allow_large);
      const auto start = Clock::now();
      if (family == FamilyId::BorosMoll) {
        (void)boros_moll_polynomials(n);
      } else {
        (void)load_or_compute(family, n, fo, nullptr);
      }
      out << "size=" << n << " seconds=" << seconds_since(start) << '\n';
    }
    return kExitHolds;
  }
  if (o.kernel == "predicate") {
    const FamilyId family = o.family.empty() ? FamilyId::Lis : require_family(o);
    const auto suite = parse_suite(o.suite.empty() ? "strong-q-log-convex" : o.suite);
    if (!suite) throw DomainError("unknown suite '" + o.suite + "'");
    const std::vector<int> sizes = o.sizes.empty() ? std::vector<int>{o.n_max.value_or(17)} : o.sizes;
    out << "bench kernel=predicate family=" << family_name(family)
        << " suite=" << suite_name(*suite) << '\n';
    for (int n : sizes) {
      check_cap(family, n, o.allow_large);
      VerifyRequest req;
      req.family = family;
      req.suite = *suite;
      req.n_min = lowest_n(family);
      req.n_max = n;
      req.depth = o.depth;
      req.options = fo;
      const auto polys_start = Clock::now();
      const Report r = verify(req);
      double predicate_seconds = 0;
      for (const auto& e : r.verdicts) predicate_seconds += e.seconds;
      out << "size=" << n << " seconds=" << predicate_seconds
          << " total_seconds=" << seconds_since(polys_start) << '\n';
    }
    return kExitHolds;
  }
  throw DomainError("--kernel must be one of determinant, family, predicate");
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& s : kSuites) {
    if (s.name == name) return s.suite;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  for (const auto& s : kSuites) {
    if (s.suite == suite) return s.name;
  }
  return "unknown";
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : kSuites) names.emplace_back(s.name);
  return names;
}

bool is_row_suite(Suite suite) {
  return suite == Suite::LogConcave || suite == Suite::KLogConcave || suite == Suite::InfLogConcave;
}

bool needs_depth(Suite suite) {
  return suite == Suite::KLogConcave || suite == Suite::KQLogConvex ||
         suite == Suite::OrderKLogConcave;
}

bool is_exploratory(FamilyId family, Suite suite) {
  switch (suite) {
    case Suite::InfLogConcave:
    case Suite::InfQLogConvex:
    case Suite::InfOrderLogConcave:
    case Suite::StrongQLogConcave:
      return true;
    case Suite::OrderKLogConcave:
      return family != FamilyId::Lis;
    case Suite::QLogConvex:
    case Suite::QLogConcave:
    case Suite::StrongQLogConvex:
    case Suite::KQLogConvex:
      return family == FamilyId::BorosMoll;
    default:
      return false;
  }
}

Report verify(const VerifyRequest& request) {
  const FamilyId family = request.family;
  if (request.n_min < lowest_n(family)) {
    throw DomainError("--n-min must be at least " + std::to_string(lowest_n(family)) + " for " +
                      std::string(family_name(family)));
  }
  if (request.n_max < request.n_min) throw WindowError("--n-max is below --n-min");

  int depth = 1;
  if (needs_depth(request.suite)) {
    if (!request.depth) {
      throw DomainError("suite " + std::string(suite_name(request.suite)) + " requires --depth");
    }
    depth = *request.depth;
  } else if (request.suite == Suite::InfLogConcave || request.suite == Suite::InfQLogConvex ||
             request.suite == Suite::InfOrderLogConcave) {
    depth = request.depth.value_or(kDefaultInfinityDepth);
  }
  if (depth < 1) throw DomainError("--depth must be at least 1");

  Report report;
  report.family = family;
  report.suite = std::string(suite_name(request.suite));
  report.n_min = request.n_min;
  report.n_max = request.n_max;
  if (needs_depth(request.suite) || depth != 1 || request.depth) report.depth = depth;
  report.exploratory = is_exploratory(family, request.suite);

  // polys[n] is the n-th member of the family.
  const auto polys = family_sequence(family, request.n_max, request.options, request.cache);

  if (is_row_suite(request.suite)) {
    const std::size_t count = static_cast<std::size_t>(request.n_max - request.n_min + 1);
    report.verdicts.resize(count);
    parallel_for(count, request.options.jobs, [&](std::size_t i) {
      const int n = request.n_min + static_cast<int>(i);
      const int lowest = family == FamilyId::BorosMoll ? 0 : 1;
      const auto start = Clock::now();
      const NumberSequence row = NumberSequence::coefficient_row(polys[n], lowest);
      VerdictEntry& e = report.verdicts[i];
      e.n = n;
      e.verdict = run_row_suite(request.suite, row, depth);
      e.seconds = seconds_since(start);
    });
    return report;
  }

  std::vector<RatPolynomial> window(polys.begin() + request.n_min, polys.begin() + request.n_max + 1);
  const PolySequence ps(request.n_min, std::move(window));
  const auto start = Clock::now();
  VerdictEntry e;
  e.window_lo = request.n_min;
  e.window_hi = request.n_max;
  e.verdict = run_window_suite(request.suite, ps, depth);
  e.seconds = seconds_since(start);
  report.verdicts.push_back(std::move(e));
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact LIS / matching crossing-number polynomials and log-concavity checks", "lcv"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  Options o;
  const auto suites = suite_names();
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--jobs", o.jobs, "Parallel workers")->check(CLI::PositiveNumber);
    sub->add_option("--route", o.route, "Determinant arithmetic")
        ->check(CLI::IsMember({"rational", "egf"}));
    sub->add_flag("--allow-large", o.allow_large, "Lift the default size caps");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "lis | matching | boros-moll")
        ->check(CLI::IsMember({"lis", "matching", "boros-moll"}));
  };

  auto* compute = app.add_subcommand("compute", "Print coefficient rows of a family");
  add_family(compute);
  add_common(compute);
  compute->add_option("--n-max", o.n_max, "Largest n");
  compute->add_option("--cache-dir", o.cache_dir, "Cache directory (or $LCV_CACHE_DIR)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a positivity suite over a family");
  add_family(verify_cmd);
  add_common(verify_cmd);
  verify_cmd->add_option("--suite", o.suite, "Predicate suite")->check(CLI::IsMember(suites));
  verify_cmd->add_option("--n-min", o.n_min, "First n of the window");
  verify_cmd->add_option("--n-max", o.n_max, "Last n of the window");
  verify_cmd->add_option("--depth", o.depth, "Operator depth (budget for inf-* suites)");
  verify_cmd->add_option("--cache-dir", o.cache_dir, "Cache directory (or $LCV_CACHE_DIR)");
  verify_cmd->add_flag("--timings", o.timings, "Include per-cell wall-clock times");

  auto* golden_cmd = app.add_subcommand("golden-diff", "Diff computed rows against the printed tables");
  add_family(golden_cmd);
  add_common(golden_cmd);
  golden_cmd->add_option("--golden-file", o.golden_file, "Use this table instead of the built-in one");
  golden_cmd->add_flag("--errata", o.errata,
                       "Accept mismatches certified as misprints by the row-sum identity");

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare with brute-force enumeration");
  add_family(oracle_cmd);
  add_common(oracle_cmd);
  oracle_cmd->add_option("--n-max", o.n_max, "Largest n");

  auto* bench_cmd = app.add_subcommand("bench", "Time a kernel");
  add_family(bench_cmd);
  add_common(bench_cmd);
  bench_cmd->add_option("--kernel", o.kernel, "determinant | family | predicate")
      ->required()
      ->check(CLI::IsMember({"determinant", "family", "predicate"}));
  bench_cmd->add_option("--sizes", o.sizes, "Sizes to time")->delimiter(',');
  bench_cmd->add_option("--order", o.order, "Truncation order for the determinant kernel");
  bench_cmd->add_option("--suite", o.suite, "Suite for the predicate kernel")
      ->check(CLI::IsMember(suites));
  bench_cmd->add_option("--n-max", o.n_max, "Size when --sizes is absent");
  bench_cmd->add_option("--depth", o.depth, "Depth for the predicate kernel");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitError;
  }

  try {
    if (compute->parsed()) return cmd_compute(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (golden_cmd->parsed()) return cmd_golden_diff(o, out);
    if (oracle_cmd->parsed()) return cmd_oracle_check(o, out);
    if (bench_cmd->parsed()) return cmd_bench(o, out);
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace lcv::cli
