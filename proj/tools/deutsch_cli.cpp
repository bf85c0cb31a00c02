/*
   Copyright 2026 the deutsch-paths authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line surface: every computation as a reproducible, scriptable
// report. Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "deutsch/deutsch.hpp"

namespace {

using deutsch::LevelSeries;
using deutsch::Path;
using deutsch::PathStats;
using deutsch::Rational;
using deutsch::Series;
using deutsch::TPoly;

constexpr const char* kEnumCapEnvVar = "DEUTSCH_ENUM_CAP";
constexpr const char* kInjectFaultEnvVar = "DEUTSCH_VERIFY_INJECT_FAULT";

int enumeration_cap() {
  if (const char* env = std::getenv(kEnumCapEnvVar)) {
    try {
      return std::max(0, std::stoi(env));
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return deutsch::kDefaultEnumerationCap;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

struct Record {
  std::string key;
  std::vector<std::string> values;
};

void print_records(const std::vector<Record>& records, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      arr.push_back({{"key", r.key}, {"values", r.values}});
    }
    std::cout << arr.dump() << "\n";
    return;
  }
  for (const auto& r : records) {
    std::cout << join(r.values, "\t") << "\n";
  }
}

std::vector<std::string> rational_strings(const Series<Rational>& s) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(s.order()) + 1);
  for (int n = 0; n <= s.order(); ++n) out.push_back(s[n].to_string());
  return out;
}

std::vector<std::string> tpoly_strings(const Series<TPoly>& s) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(s.order()) + 1);
  for (int n = 0; n <= s.order(); ++n) out.push_back(s[n].to_string());
  return out;
}

int run_series(const std::string& name, int order, const std::string& format) {
  if (order < 0) {
    std::cerr << "series: order must be >= 0\n";
    return 2;
  }
  namespace cf = deutsch::closedforms;
  std::vector<std::string> values;
  if (name == "phi0") {
    values = rational_strings(cf::phi0(order));
  } else if (name == "phi0-t") {
    values = tpoly_strings(cf::phi0_t(order));
  } else if (name == "stanley") {
    values = rational_strings(cf::stanley_series(order));
  } else if (name == "open") {
    values = rational_strings(cf::open_paths(order));
  } else if (name == "motzkin") {
    values = rational_strings(cf::motzkin(order));
  } else if (name == "mean-numerator") {
    values = rational_strings(cf::mean_numerator(order));
  } else if (name == "v") {
    values = rational_strings(cf::v_series(order));
  } else {
    std::cerr << "series: unknown series name '" << name
              << "' (expected phi0, phi0-t, stanley, open, motzkin, mean-numerator, v)\n";
    return 2;
  }
  print_records({{name, values}}, format);
  return 0;
}

struct CountOptions {
  int length = 0;
  std::optional<int> end_level;
  bool open = false;
  bool stanley = false;
  bool dyck_only = false;
  std::string by;
  std::string format = "tsv";
};

int run_count(const CountOptions& opt) {
  if (opt.stanley && opt.open) {
    std::cerr << "count: --stanley is defined for closed paths only; it cannot be combined "
                 "with --open\n";
    return 2;
  }
  if (opt.open && opt.end_level) {
    std::cerr << "count: --open and --end-level are mutually exclusive\n";
    return 2;
  }
  if (opt.stanley && opt.end_level && *opt.end_level != 0) {
    std::cerr << "count: --stanley requires end level 0\n";
    return 2;
  }
  if (!opt.by.empty() && opt.by != "single-up-runs" && opt.by != "mountains") {
    std::cerr << "count: --by must be single-up-runs or mountains\n";
    return 2;
  }

  const int target_level = opt.end_level.value_or(0);
  auto keep = [&](const PathStats& s, const Path& p) {
    if (!opt.open && s.end_level != target_level) return false;
    if (opt.stanley && !deutsch::stanley_ok(p)) return false;
    if (opt.dyck_only && !deutsch::is_dyck(p)) return false;
    return true;
  };

  const int cap = enumeration_cap();
  if (opt.by.empty()) {
    const long long n = deutsch::count_paths(opt.length, keep, cap);
    print_records({{"count", {std::to_string(n)}}}, opt.format);
    return 0;
  }

  auto key = [&](const PathStats& s, const Path&) {
    return opt.by == "single-up-runs" ? s.single_up_runs : s.mountains;
  };
  const auto hist = deutsch::path_histogram(opt.length, key, keep, cap);
  if (opt.format == "json") {
    std::vector<Record> records;
    for (const auto& [k, v] : hist) records.push_back({std::to_string(k), {std::to_string(v)}});
    print_records(records, opt.format);
  } else {
    std::vector<std::string> parts;
    for (const auto& [k, v] : hist) parts.push_back(std::to_string(k) + ":" + std::to_string(v));
    std::cout << join(parts, "\t") << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify: the full oracle-equivalence suite.

struct CheckOutcome {
  std::string name;
  bool ok = true;
  std::string detail;
};

class VerifyRun {
 public:
  explicit VerifyRun(std::vector<CheckOutcome>& sink) : sink_(sink) {}

  void pass(const std::string& name) { sink_.push_back({name, true, {}}); }
  void fail(const std::string& name, const std::string& detail) {
    sink_.push_back({name, false, detail});
  }

  template <deutsch::CoefficientRing R>
  void equal_series(const std::string& name, const Series<R>& got, const Series<R>& want,
                    const std::string& got_label, const std::string& want_label) {
    const int m = std::min(got.order(), want.order());
    for (int n = 0; n <= m; ++n) {
      if (!(got[n] == want[n])) {
        std::ostringstream os;
        os << "first difference at z^" << n << ": " << want_label << "=" << want[n] << ", "
           << got_label << "=" << got[n];
        fail(name, os.str());
        return;
      }
    }
    pass(name);
  }

 private:
  std::vector<CheckOutcome>& sink_;
};

struct BruteAggregates {
  std::vector<long long> open_total;
  std::vector<long long> closed;
  std::vector<long long> stanley;
  std::vector<std::map<int, long long>> level_down;     // ends with down-step, or empty
  std::vector<std::map<int, long long>> single_up;      // closed paths only
  std::vector<std::map<std::pair<int, int>, long long>> mountain_level;
};

BruteAggregates collect_brute(int max_length, int cap) {
  BruteAggregates b;
  const size_t size = static_cast<size_t>(max_length) + 1;
  b.open_total.assign(size, 0);
  b.closed.assign(size, 0);
  b.stanley.assign(size, 0);
  b.level_down.assign(size, {});
  b.single_up.assign(size, {});
  b.mountain_level.assign(size, {});
  for (int n = 0; n <= max_length; ++n) {
    deutsch::enumerate_paths(
        n,
        [&](const Path& p) {
          const PathStats s = deutsch::path_stats(p);
          const size_t i = static_cast<size_t>(n);
          b.open_total[i] += 1;
          if (p.empty() || s.ends_with_down) {
            b.level_down[i][s.end_level] += 1;
            b.mountain_level[i][{s.mountains, s.end_level}] += 1;
          }
          if (s.end_level == 0) {
            b.closed[i] += 1;
            b.single_up[i][s.single_up_runs] += 1;
            if (deutsch::stanley_ok(p)) b.stanley[i] += 1;
          }
        },
        cap);
  }
  return b;
}

Series<Rational> counts_to_series(const std::vector<long long>& counts, int order) {
  std::vector<Rational> c;
  c.reserve(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c.emplace_back(counts[static_cast<size_t>(n)]);
  return Series<Rational>(std::move(c), order);
}

TPoly hist_to_tpoly(const std::map<int, long long>& hist) {
  std::vector<Rational> c;
  for (const auto& [k, v] : hist) {
    if (static_cast<size_t>(k) >= c.size()) c.resize(static_cast<size_t>(k) + 1);
    c[static_cast<size_t>(k)] = Rational(v);
  }
  return TPoly(std::move(c));
}

int run_verify(int max_length, int max_order) {
  namespace cf = deutsch::closedforms;
  const int cap = enumeration_cap();
  if (max_length < 0 || max_order < 0) {
    std::cerr << "verify: bounds must be >= 0\n";
    return 2;
  }
  if (max_length > cap) {
    std::cerr << "verify: max length " << max_length << " exceeds enumeration cap " << cap
              << "\n";
    return 2;
  }
  if (max_order < max_length) {
    std::cerr << "verify: max order must be >= max length\n";
    return 2;
  }
  const int L = max_length;
  const int M = max_order;

  std::vector<CheckOutcome> outcomes;
  VerifyRun run(outcomes);

  const BruteAggregates brute = collect_brute(L, cap);

  // Closed forms, with the optional fault hook applied to the copy that is
  // compared against the other routes.
  Series<Rational> phi0 = cf::phi0(M);
  if (const char* env = std::getenv(kInjectFaultEnvVar)) {
    const int fault = std::atoi(env);
    if (fault >= 0 && fault <= M) {
      auto coeffs = phi0.coefficients();
      coeffs[static_cast<size_t>(fault)] += Rational(1);
      phi0 = Series<Rational>(std::move(coeffs), M);
    }
  }

  const LevelSeries<Rational> levels = cf::phi_levels(M);
  const Series<Rational> open = cf::open_paths(M);
  const Series<Rational> motzkin = cf::motzkin(M);
  const Series<Rational> stanley = cf::stanley_series(M);
  const Series<TPoly> phi0_t = cf::phi0_t(M);

  // Brute force vs closed forms.
  run.equal_series("brute-vs-closed closed-counts", phi0.truncated(L),
                   counts_to_series(brute.closed, L), "closed-form", "brute");
  {
    bool reported = false;
    for (int n = 0; n <= L && !reported; ++n) {
      for (int j = 0; j <= n && !reported; ++j) {
        const auto it = brute.level_down[static_cast<size_t>(n)].find(j);
        const Rational want(it == brute.level_down[static_cast<size_t>(n)].end() ? 0
                                                                                 : it->second);
        if (!(levels.level(j)[n] == want)) {
          std::ostringstream os;
          os << "first difference at z^" << n << " level " << j << ": brute=" << want
             << ", closed-form=" << levels.level(j)[n];
          run.fail("brute-vs-closed level-counts", os.str());
          reported = true;
        }
      }
    }
    if (!reported) run.pass("brute-vs-closed level-counts");
  }
  run.equal_series("brute-vs-closed open-counts", open.truncated(L),
                   counts_to_series(brute.open_total, L), "closed-form", "brute");
  run.equal_series("brute-vs-closed stanley-counts", stanley.truncated(L),
                   counts_to_series(brute.stanley, L), "closed-form", "brute");
  {
    bool reported = false;
    for (int n = 0; n <= L && !reported; ++n) {
      const TPoly want = hist_to_tpoly(brute.single_up[static_cast<size_t>(n)]);
      if (!(phi0_t[n] == want)) {
        std::ostringstream os;
        os << "first difference at z^" << n << ": brute=" << want
           << ", closed-form=" << phi0_t[n];
        run.fail("brute-vs-closed single-up-run-histogram", os.str());
        reported = true;
      }
    }
    if (!reported) run.pass("brute-vs-closed single-up-run-histogram");
  }

  // Slices: per-mountain counts and agreement with the closed forms.
  std::vector<LevelSeries<Rational>> slices_by_k;
  {
    auto state = deutsch::slices::SliceState<Rational>::initial(M);
    slices_by_k.push_back(state.current);
    while (!state.exhausted()) {
      state.advance();
      slices_by_k.push_back(state.current);
    }
    bool reported = false;
    for (int n = 0; n <= L && !reported; ++n) {
      for (size_t k = 0; k < slices_by_k.size() && !reported; ++k) {
        for (int j = 0; j <= n && !reported; ++j) {
          const auto& hist = brute.mountain_level[static_cast<size_t>(n)];
          const auto it = hist.find({static_cast<int>(k), j});
          const Rational want(it == hist.end() ? 0 : it->second);
          if (!(slices_by_k[k].level(j)[n] == want)) {
            std::ostringstream os;
            os << "first difference at z^" << n << " mountains " << k << " level " << j
               << ": brute=" << want << ", slice=" << slices_by_k[k].level(j)[n];
            run.fail("brute-vs-slice mountain-level-counts", os.str());
            reported = true;
          }
        }
      }
    }
    if (!reported) run.pass("brute-vs-slice mountain-level-counts");
  }

  const LevelSeries<Rational> accumulated = deutsch::slices::accumulate(M);
  {
    bool reported = false;
    for (int j = 0; j <= M && !reported; ++j) {
      if (!(accumulated.level(j) == levels.level(j))) {
        for (int n = 0; n <= M; ++n) {
          if (!(accumulated.level(j)[n] == levels.level(j)[n])) {
            std::ostringstream os;
            os << "first difference at z^" << n << " level " << j
               << ": slice=" << accumulated.level(j)[n]
               << ", closed-form=" << levels.level(j)[n];
            run.fail("slice-vs-closed level-series", os.str());
            reported = true;
            break;
          }
        }
      }
    }
    if (!reported) run.pass("slice-vs-closed level-series");
  }

  const LevelSeries<TPoly> accumulated_marked = deutsch::slices::accumulate_marked(M);
  run.equal_series("slice-vs-closed marked-level0", accumulated_marked.level(0), phi0_t,
                   "slice", "closed-form");
  {
    const auto at_one = [](const TPoly& p) { return p.evaluated_at_one(); };
    bool reported = false;
    for (int j = 0; j <= M && !reported; ++j) {
      const auto specialized = deutsch::map_coeffs(accumulated_marked.level(j), at_one);
      if (!(specialized == accumulated.level(j))) {
        for (int n = 0; n <= M; ++n) {
          if (!(specialized[n] == accumulated.level(j)[n])) {
            std::ostringstream os;
            os << "first difference at z^" << n << " level " << j;
            run.fail("marked-t1-specialization", os.str());
            reported = true;
            break;
          }
        }
      }
    }
    if (!reported) run.pass("marked-t1-specialization");
  }

  // Kernel identities.
  {
    const auto roots = cf::kernel_roots(M);
    run.equal_series("kernel-root-sum", roots.w1 + roots.w2, cf::detail::zpoly({1, 1}, M),
                     "w1+w2", "1+z");
    run.equal_series("kernel-root-product", roots.w1 * roots.w2,
                     cf::detail::zpoly({0, 1, 1}, M), "w1*w2", "z(1+z)");
    const auto marked = cf::kernel_roots_marked(M);
    run.equal_series("kernel-marked-quadratic-w1", cf::marked_kernel_residual(marked.w1),
                     Series<TPoly>(M), "residual", "0");
    run.equal_series("kernel-marked-quadratic-w2", cf::marked_kernel_residual(marked.w2),
                     Series<TPoly>(M), "residual", "0");
  }

  // Route equalities.
  run.equal_series("route-equality phi0 (radical vs root)", phi0, cf::phi0_from_root(M),
                   "radical", "1/w1");
  run.equal_series("route-equality phi0 (radical vs v-form)", phi0, cf::phi0_v_form(M),
                   "radical", "v-form");
  run.equal_series("route-equality stanley (sequence vs radical)", cf::stanley_sequence_form(M),
                   cf::stanley_radical(M), "sequence", "radical");
  run.equal_series("route-equality stanley (sequence vs v-form)", cf::stanley_sequence_form(M),
                   cf::stanley_v_form(M), "sequence", "v-form");
  run.equal_series("route-equality mean-numerator", cf::mean_numerator_derivative(M),
                   cf::mean_numerator_v_form(M), "derivative", "v-form");
  run.equal_series("motzkin-functional-equation", motzkin,
                   Series<Rational>::constant(1, M) + motzkin.shifted_up(1) +
                       (motzkin * motzkin).shifted_up(2),
                   "M", "1+zM+z^2M^2");
  run.equal_series("open-equals-motzkin", open, motzkin, "open", "motzkin");

  bool all_ok = true;
  for (const auto& o : outcomes) {
    if (o.ok) {
      std::cout << "PASS " << o.name << "\n";
    } else {
      std::cout << "FAIL " << o.name << ": " << o.detail << "\n";
      all_ok = false;
    }
  }
  std::cout << (all_ok ? "verify: all checks passed" : "verify: MISMATCH DETECTED") << "\n";
  return all_ok ? 0 : 1;
}

int run_asymptotics(const std::vector<int>& ns, std::optional<int> order_opt,
                    const std::string& format) {
  namespace as = deutsch::asymptotics;
  if (ns.empty()) {
    std::cerr << "asymptotics: at least one --n value is required\n";
    return 2;
  }
  int max_n = 0;
  for (int n : ns) {
    if (n < 2) {
      std::cerr << "asymptotics: n must be >= 2\n";
      return 2;
    }
    max_n = std::max(max_n, n);
  }
  const int order = order_opt.value_or(max_n);
  if (order < max_n) {
    std::cerr << "asymptotics: --order must be >= the largest n\n";
    return 2;
  }
  const as::SeriesContext ctx = as::make_context(order);

  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int n : ns) {
      const as::AsymptoticReport r = as::report(n, ctx);
      arr.push_back({{"n", r.n},
                     {"total", r.exact_total.to_string()},
                     {"weighted", r.exact_weighted.to_string()},
                     {"mean", r.mean_exact.to_string()},
                     {"mean_decimal", r.mean},
                     {"predicted_mean", r.predicted_mean},
                     {"total_prediction", r.total_prediction},
                     {"weighted_prediction", r.weighted_prediction},
                     {"mean_rel_err", r.mean_rel_err},
                     {"total_rel_err", r.total_rel_err},
                     {"weighted_rel_err", r.weighted_rel_err}});
    }
    std::cout << arr.dump() << "\n";
    return 0;
  }

  for (int n : ns) {
    const as::AsymptoticReport r = as::report(n, ctx);
    std::cout << "n=" << r.n << "\ttotal=" << r.exact_total.to_string()
              << "\tweighted=" << r.exact_weighted.to_string()
              << "\tmean=" << r.mean_exact.to_string()
              << "\tmean_decimal=" << fmt_double(r.mean)
              << "\tpredicted_mean=" << fmt_double(r.predicted_mean)
              << "\ttotal_prediction=" << fmt_double(r.total_prediction)
              << "\tweighted_prediction=" << fmt_double(r.weighted_prediction)
              << "\tmean_rel_err=" << fmt_double(r.mean_rel_err)
              << "\ttotal_rel_err=" << fmt_double(r.total_rel_err)
              << "\tweighted_rel_err=" << fmt_double(r.weighted_rel_err) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deutsch: exact enumeration of Deutsch paths (down-steps of any size)"};
  app.require_subcommand(1);

  auto* series_cmd =
      app.add_subcommand("series", "Print coefficients 0..order of a named series");
  std::string series_name;
  int series_order = 0;
  std::string series_format = "tsv";
  series_cmd->add_option("name", series_name,
                         "phi0 | phi0-t | stanley | open | motzkin | mean-numerator | v")
      ->required();
  series_cmd->add_option("--order", series_order, "Truncation order (>= 0)")->required();
  series_cmd->add_option("--format", series_format, "tsv | json")
      ->check(CLI::IsMember({"tsv", "json"}));

  auto* count_cmd = app.add_subcommand("count", "Brute-force path counts");
  CountOptions count_opt;
  count_cmd->add_option("--length", count_opt.length, "Path length (steps)")->required();
  count_cmd->add_option("--end-level", count_opt.end_level, "Required end level (default 0)");
  count_cmd->add_flag("--open", count_opt.open, "Count paths of every end level");
  count_cmd->add_flag("--stanley", count_opt.stanley,
                      "Only closed paths whose down-runs to the x-axis start at odd levels");
  count_cmd->add_flag("--dyck-only", count_opt.dyck_only, "Only paths with unit down-steps");
  count_cmd->add_option("--by", count_opt.by, "Histogram key: single-up-runs | mountains");
  count_cmd->add_option("--format", count_opt.format, "tsv | json")
      ->check(CLI::IsMember({"tsv", "json"}));

  auto* verify_cmd =
      app.add_subcommand("verify", "Cross-check brute force, slice iteration and closed forms");
  int verify_max_length = 10;
  int verify_max_order = 30;
  verify_cmd->add_option("--max-length", verify_max_length,
                         "Largest length checked by brute force (default 10)");
  verify_cmd->add_option("--max-order", verify_max_order,
                         "Truncation order of the series checks (default 30)");

  auto* asym_cmd = app.add_subcommand("asymptotics", "Exact coefficients vs growth predictions");
  std::vector<int> asym_ns;
  std::optional<int> asym_order;
  std::string asym_format = "tsv";
  asym_cmd->add_option("--n", asym_ns, "Coefficient indices (comma separated)")
      ->required()
      ->delimiter(',');
  asym_cmd->add_option("--order", asym_order, "Series order (default: largest n)");
  asym_cmd->add_option("--format", asym_format, "tsv | json")
      ->check(CLI::IsMember({"tsv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*series_cmd) return run_series(series_name, series_order, series_format);
    if (*count_cmd) return run_count(count_opt);
    if (*verify_cmd) return run_verify(verify_max_length, verify_max_order);
    if (*asym_cmd) return run_asymptotics(asym_ns, asym_order, asym_format);
  } catch (const deutsch::CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const deutsch::asymptotics::OrderTooSmall& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
