#include "excount/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "excount/asymptotics.hpp"
#include "excount/exact_moments.hpp"
#include "excount/graph_counts.hpp"
#include "excount/numeric.hpp"
#include "excount/rng.hpp"
#include "excount/simulate.hpp"

namespace excount::cli {

namespace {

using nlohmann::json;

// One value, rendered identically (up to encoding) in CSV and JSON.
struct Cell {
  std::string csv;
  json js;
};

Cell cell_int(long long v) { return {std::to_string(v), json(v)}; }
Cell cell_u64(std::uint64_t v) { return {std::to_string(v), json(v)}; }
Cell cell_big(const BigInt& v) { return {v.str(), json(v.str())}; }
Cell cell_rat(const BigRat& v) {
  json o;
  o["num"] = boost::multiprecision::numerator(v).str();
  o["den"] = boost::multiprecision::denominator(v).str();
  return {rat_string(v), o};
}
Cell cell_double(double v) { return {double_string(v), json(v)}; }
Cell cell_str(const std::string& s) { return {s, json(s)}; }
Cell cell_empty() { return {"", json("")}; }

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

void emit(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json doc;
    doc["command"] = t.command;
    doc["columns"] = t.columns;
    json rows = json::array();
    for (const auto& r : t.rows) {
      json row = json::array();
      for (const auto& c : r) row.push_back(c.js);
      rows.push_back(row);
    }
    doc["rows"] = rows;
    os << doc.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i)
        os << (i ? "," : "") << r[i].csv;
      os << "\n";
    }
  }
}

// Writes to `fallback` when path is "-", else to the named file.
int with_output(const std::string& path, std::ostream& fallback,
                std::ostream& err,
                const std::function<void(std::ostream&)>& fn) {
  if (path == "-") {
    fn(fallback);
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file: " << path << "\n";
    return 1;
  }
  fn(f);
  if (!f) {
    err << "error: write failed: " << path << "\n";
    return 1;
  }
  return 0;
}

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& s) {
  const auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    std::size_t used = 0;
    const std::string a = s.substr(0, pos), b = s.substr(pos + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    if (hi < lo) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected N or LO..HI, got '" + s + "'");
  }
}

std::vector<int> parse_ladder(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 2) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError("ladder", "bad ladder entry '" + tok + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError("ladder", "empty ladder");
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1])
      throw CLI::ValidationError("ladder", "ladder must be ascending");
  return out;
}

long long max_feasible_k(int n) {
  return static_cast<long long>(n) * (n - 1) / 2 - n + 1;
}

std::string resolve_cache_path(const std::string& flag_value) {
  if (const char* env = std::getenv("EXCURSION_COUNTS_CACHE"))
    if (*env) return env;
  return flag_value;
}

struct SeedSpec {
  std::uint64_t seed = kDefaultSeed;
  bool zero_noise = false;
};

SeedSpec parse_seed(const std::string& s) {
  if (s == "fixed-zero-hook") return {0, true};
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return {v, false};
  } catch (const std::exception&) {
    throw CLI::ValidationError(
        "seed", "expected an unsigned integer or 'fixed-zero-hook', got '" +
                    s + "'");
  }
}

// ---------------------------------------------------------------- count ---

struct CountConfig {
  std::string n_range, k_range;
  std::string cache_path;
  bool verify = false;
  std::string format = "csv";
  std::string output = "-";
};

int cmd_count(const CountConfig& cfg, std::ostream& out, std::ostream& err) {
  const Range nr = parse_range(cfg.n_range);
  const Range kr = parse_range(cfg.k_range);
  if (nr.lo < 1) {
    err << "error: count needs n >= 1\n";
    return 1;
  }
  const std::string cache_path = resolve_cache_path(cfg.cache_path);
  GraphCountTable table;
  if (!cache_path.empty() && std::filesystem::exists(cache_path))
    table = load_cache(cache_path);

  Table t;
  t.command = "count";
  t.columns = {"n", "k", "count", "provenance", "note"};
  for (int n = nr.lo; n <= nr.hi; ++n) {
    for (int k = kr.lo; k <= kr.hi; ++k) {
      if (k < 0 || k > max_feasible_k(n)) {
        t.rows.push_back({cell_int(n), cell_int(k), cell_big(BigInt(0)),
                          cell_str(""), cell_str("infeasible")});
        continue;
      }
      std::string prov = "recurrence";
      BigInt value;
      if (auto hit = table.lookup(n, k)) {
        value = *hit;
        prov = provenance_name(table.entries().at({n, k}).begin()->first);
      } else {
        value = recurrence_count(n, k, table);
      }
      if (cfg.verify && n >= 2 && n <= 7) {
        const BigInt brute = brute_force_count(n, k);
        if (brute != value) {
          err << "verification mismatch at (n=" << n << ", k=" << k
              << "): table=" << value.str() << " brute_force=" << brute.str()
              << "\n";
          return 2;
        }
        table.record(n, k, Provenance::brute_force, brute);
      }
      t.rows.push_back({cell_int(n), cell_int(k), cell_big(value),
                        cell_str(prov), cell_str("")});
    }
  }
  if (!cache_path.empty()) save_cache(table, cache_path);
  return with_output(cfg.output, out, err,
                     [&](std::ostream& os) { emit(t, cfg.format, os); });
}

// ------------------------------------------------------- spencer-verify ---

struct SpencerVerifyConfig {
  int n_max = 5;
  int k_max = 3;
  bool inject_fault = false;
  int exact_ceiling = 60;
  std::string cache_path;
  std::string format = "csv";
  std::string output = "-";
};

int cmd_spencer_verify(const SpencerVerifyConfig& cfg, std::ostream& out,
                       std::ostream& err) {
  if (cfg.n_max < 2) {
    err << "error: spencer-verify needs --n-max >= 2\n";
    return 1;
  }
  if (cfg.n_max > cfg.exact_ceiling) {
    err << "error: exact arithmetic unavailable at n=" << cfg.n_max
        << " (ceiling " << cfg.exact_ceiling
        << "); raise --exact-ceiling deliberately\n";
    return 1;
  }
  const std::string cache_path = resolve_cache_path(cfg.cache_path);
  GraphCountTable table;
  if (!cache_path.empty() && std::filesystem::exists(cache_path))
    table = load_cache(cache_path);

  DpOptions dp_opt;
  dp_opt.exact_ceiling = cfg.exact_ceiling;
  Table t;
  t.command = "spencer-verify";
  t.columns = {"n", "k", "spencer", "recurrence", "brute_force", "verdict"};
  bool all_match = true;
  for (int n = 2; n <= cfg.n_max; ++n) {
    const int k_hi = static_cast<int>(
        std::min<long long>(cfg.k_max, max_feasible_k(n)));
    auto spencer = spencer_count_row(n, k_hi, dp_opt);
    if (cfg.inject_fault && n == cfg.n_max) spencer[0] += 1;
    for (int k = 0; k <= k_hi; ++k) {
      const BigInt rec = recurrence_count(n, k, table);
      std::optional<BigInt> brute;
      if (n <= 7) brute = brute_force_count(n, k);
      const bool match =
          spencer[k] == rec && (!brute || *brute == spencer[k]);
      if (match) {
        table.record(n, k, Provenance::spencer, spencer[k]);
        if (brute) table.record(n, k, Provenance::brute_force, *brute);
      } else {
        all_match = false;
      }
      t.rows.push_back({cell_int(n), cell_int(k), cell_big(spencer[k]),
                        cell_big(rec),
                        brute ? cell_big(*brute) : cell_empty(),
                        cell_str(match ? "EXACT-MATCH" : "MISMATCH")});
    }
  }
  if (!all_match)
    err << "spencer-verify: at least one MISMATCH (see report)\n";
  if (!cache_path.empty() && !cfg.inject_fault && all_match)
    save_cache(table, cache_path);
  const int rc = with_output(cfg.output, out, err, [&](std::ostream& os) {
    emit(t, cfg.format, os);
  });
  if (rc != 0) return rc;
  return all_match ? 0 : 2;
}

// -------------------------------------------------------------- moments ---

struct MomentsConfig {
  int n = 0;
  int k = 0;
  bool use_float = false;
  int exact_ceiling = 60;
  int threads = 0;
  std::string format = "csv";
  std::string output = "-";
};

int cmd_moments(const MomentsConfig& cfg, std::ostream& out,
                std::ostream& err) {
  DpOptions opt;
  opt.arithmetic = cfg.use_float ? Arithmetic::floating : Arithmetic::exact;
  opt.exact_ceiling = cfg.exact_ceiling;
  opt.threads = cfg.threads;
  MomentTable mt = dp_moments(cfg.n, cfg.k, opt);
  binomial_moments(mt);

  Table t;
  t.command = "moments";
  t.columns = {"n",   "mode",     "j",
               "raw", "binomial", "scaled",
               "total_weight", "log_total_weight"};
  const Cell weight_cell =
      mt.exact ? cell_rat(mt.total_weight) : cell_empty();
  const Cell log_weight_cell = cell_double(mt.log_total_weight);
  const double log_scale =
      1.5 * std::log(static_cast<double>(cfg.n - 1));
  for (int j = 0; j <= cfg.k; ++j) {
    // E*[M_n^j] = E*[M^j] / (n-1)^{3j/2}
    const double scaled =
        mt.raw_value(j) * std::exp(-log_scale * j);
    t.rows.push_back({cell_int(cfg.n),
                      cell_str(mt.exact ? "exact" : "float"), cell_int(j),
                      mt.exact ? cell_rat(mt.raw[j]) : cell_double(mt.raw_f[j]),
                      mt.exact ? cell_rat(mt.binomial[j])
                               : cell_double(mt.binomial_f[j]),
                      cell_double(scaled), weight_cell, log_weight_cell});
  }
  return with_output(cfg.output, out, err,
                     [&](std::ostream& os) { emit(t, cfg.format, os); });
}

// ------------------------------------------------------------- simulate ---

struct SimulateConfig {
  std::string kind;
  int n = 0;
  int grid = 0;
  int k = 1;
  long long samples = 0;
  std::string seed = std::to_string(kDefaultSeed);
  int workers = 1;
  std::string quadrature = "left";
  std::string format = "csv";
  std::string output = "-";
};

int cmd_simulate(const SimulateConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  const SeedSpec seed = parse_seed(cfg.seed);
  const bool walk = cfg.kind == "walk";
  const int size = walk ? cfg.n : cfg.grid;
  if (size < 2) {
    err << "error: simulate needs " << (walk ? "--n" : "--grid")
        << " >= 2 for kind=" << cfg.kind << "\n";
    return 1;
  }
  EstimateOptions opt;
  opt.k = cfg.k;
  opt.samples = cfg.samples;
  opt.seed = seed.seed;
  opt.workers = cfg.workers;
  opt.zero_noise = seed.zero_noise;
  opt.quadrature = cfg.quadrature == "trapezoid" ? Quadrature::trapezoid
                                                 : Quadrature::left;
  const EstimateReport rep = estimate_moments(
      walk ? SampleKind::walk : SampleKind::excursion, size, opt);

  Table t;
  t.command = "simulate";
  t.columns = {"kind", "size",       "k",    "samples", "seed", "workers",
               "quadrature", "hook", "j",    "mean",    "std_error"};
  for (int j = 1; j <= rep.k; ++j)
    t.rows.push_back(
        {cell_str(rep.estimand), cell_int(rep.size), cell_int(rep.k),
         cell_int(rep.samples), cell_u64(rep.seed), cell_int(rep.workers),
         cell_str(rep.quadrature == Quadrature::left ? "left" : "trapezoid"),
         cell_str(rep.zero_noise ? "zero-noise" : "none"), cell_int(j),
         cell_double(rep.mean[j - 1]), cell_double(rep.std_error[j - 1])});
  return with_output(cfg.output, out, err,
                     [&](std::ostream& os) { emit(t, cfg.format, os); });
}

// ------------------------------------------------------------- converge ---

struct ConvergeConfig {
  int k = 1;
  std::string ladder;
  std::string ratio = "all";
  long long samples = 100000;
  int grid = 2000;
  std::string seed = std::to_string(kDefaultSeed);
  int workers = 1;
  std::string plot_path;
  std::string format = "csv";
  std::string output = "-";
};

int cmd_converge(const ConvergeConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  const std::vector<int> ladder = parse_ladder(cfg.ladder);
  const SeedSpec seed = parse_seed(cfg.seed);
  const bool want_thm1 = cfg.ratio == "all" || cfg.ratio == "thm1";
  const bool want_mc_limit = cfg.ratio == "all" || cfg.ratio == "mc-limit";
  const bool want_binom = cfg.ratio == "all" || cfg.ratio == "binom-raw";
  const int k = cfg.k;

  // Scaled DP moments along the ladder (float mode).
  std::vector<double> mnk(ladder.size());
  std::vector<double> binom_raw(ladder.size(), 0.0);
  DpOptions fopt;
  fopt.arithmetic = Arithmetic::floating;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    const int n = ladder[i];
    MomentTable mt = dp_moments(n, k, fopt);
    binomial_moments(mt);
    mnk[i] = mt.raw_value(k) *
             std::pow(static_cast<double>(n - 1), -1.5 * k);
    if (want_binom) binom_raw[i] = binomial_vs_raw_ratio(mt, k);
  }

  std::optional<ExtrapolationResult> fit;
  if (ladder.size() >= 2) {
    std::vector<std::pair<int, double>> pts;
    for (std::size_t i = 0; i < ladder.size(); ++i)
      pts.emplace_back(ladder[i], mnk[i]);
    fit = extrapolate_vs_inv_sqrt(pts);
  } else {
    err << "warning: single ladder point, no extrapolation\n";
  }

  // Monte Carlo estimate of the limiting area moment.
  std::optional<EstimateReport> mc;
  if (want_mc_limit) {
    EstimateOptions mopt;
    mopt.k = k;
    mopt.samples = cfg.samples;
    mopt.seed = seed.seed;
    mopt.workers = cfg.workers;
    mopt.zero_noise = seed.zero_noise;
    mc = estimate_moments(SampleKind::excursion, cfg.grid, mopt);
  }

  // Exact counts for the count-ratio diagnostic.
  std::vector<BigInt> counts(ladder.size());
  if (want_thm1 && fit) {
    DpOptions eopt;
    eopt.exact_ceiling = std::max(60, ladder.back());
    for (std::size_t i = 0; i < ladder.size(); ++i)
      counts[i] = spencer_count(ladder[i], k, eopt);
  }

  Table t;
  t.command = "converge";
  t.columns = {"k", "n", "mn_k"};
  if (want_binom) t.columns.push_back("binom_raw_ratio");
  if (want_thm1 && fit) {
    t.columns.push_back("count");
    t.columns.push_back("thm1_ratio");
  }
  if (want_mc_limit) t.columns.push_back("mc_limit_ratio");
  if (fit) {
    t.columns.push_back("extrapolated_ea_k");
    t.columns.push_back("fit_residual");
  }
  if (want_mc_limit) {
    t.columns.push_back("mc_ea_k");
    t.columns.push_back("mc_std_error");
  }
  t.columns.push_back("trend");

  // Trend verdict on the primary emitted ratio sequence.
  std::vector<double> trend_ratios;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    double r = 0.0;
    if (want_mc_limit && mc && mc->mean[k - 1] > 0.0)
      r = mnk[i] / mc->mean[k - 1];
    else if (want_binom)
      r = binom_raw[i];
    else if (want_thm1 && fit && fit->intercept > 0.0)
      r = theorem1_ratio(ladder[i], k, counts[i], fit->intercept).ratio;
    trend_ratios.push_back(r);
  }
  std::string trend = "";
  if (ladder.size() >= 2 && trend_ratios.front() != 0.0)
    trend = (trend_ratios.back() == 1.0 ||
             std::fabs(trend_ratios.back() - 1.0) <
                 std::fabs(trend_ratios.front() - 1.0))
                ? "improving"
                : "not-improving";

  for (std::size_t i = 0; i < ladder.size(); ++i) {
    std::vector<Cell> row{cell_int(k), cell_int(ladder[i]),
                          cell_double(mnk[i])};
    if (want_binom) row.push_back(cell_double(binom_raw[i]));
    if (want_thm1 && fit) {
      row.push_back(cell_big(counts[i]));
      const auto diag =
          theorem1_ratio(ladder[i], k, counts[i], fit->intercept,
                         "spencer", "dp-extrapolation");
      row.push_back(cell_double(diag.ratio));
    }
    if (want_mc_limit)
      row.push_back(cell_double(mc->mean[k - 1] > 0.0
                                    ? mnk[i] / mc->mean[k - 1]
                                    : 0.0));
    if (fit) {
      row.push_back(cell_double(fit->intercept));
      row.push_back(cell_double(fit->residual_rms));
    }
    if (want_mc_limit) {
      row.push_back(cell_double(mc->mean[k - 1]));
      row.push_back(cell_double(mc->std_error[k - 1]));
    }
    row.push_back(cell_str(trend));
    t.rows.push_back(std::move(row));
  }

  if (!cfg.plot_path.empty()) {
    std::ofstream pf(cfg.plot_path, std::ios::binary);
    if (!pf) {
      err << "error: cannot open plot file: " << cfg.plot_path << "\n";
      return 1;
    }
    for (std::size_t i = 0; i < ladder.size(); ++i)
      pf << double_string(1.0 / std::sqrt(double(ladder[i]))) << " "
         << double_string(mnk[i]) << "\n";
  }
  return with_output(cfg.output, out, err,
                     [&](std::ostream& os) { emit(t, cfg.format, os); });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Connected-graph counts, excursion-walk moments, and the Monte Carlo "
      "bridge between them"};
  app.require_subcommand(1);

  CountConfig count_cfg;
  auto* sc_count = app.add_subcommand(
      "count", "Exact connected-graph counts C(n,k) over ranges");
  sc_count->add_option("--n", count_cfg.n_range, "n or lo..hi")->required();
  sc_count->add_option("--k", count_cfg.k_range, "k or lo..hi")->required();
  sc_count->add_option("--cache", count_cfg.cache_path,
                       "cache file (EXCURSION_COUNTS_CACHE overrides)");
  sc_count->add_flag("--verify", count_cfg.verify,
                     "cross-check against brute force for n <= 7");
  sc_count->add_option("--format", count_cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sc_count->add_option("--output", count_cfg.output, "output path or -");

  SpencerVerifyConfig sv_cfg;
  auto* sc_sv = app.add_subcommand(
      "spencer-verify",
      "Check n^{n-2} E*[binom(M,k)] against independent counts");
  sc_sv->add_option("--n-max", sv_cfg.n_max, "largest n")->required();
  sc_sv->add_option("--k-max", sv_cfg.k_max, "largest k (default 3)");
  sc_sv->add_flag("--inject-fault", sv_cfg.inject_fault,
                  "test hook: perturb one value to force a MISMATCH");
  sc_sv->add_option("--exact-ceiling", sv_cfg.exact_ceiling,
                    "exact-DP size ceiling");
  sc_sv->add_option("--cache", sv_cfg.cache_path,
                    "cache file (EXCURSION_COUNTS_CACHE overrides)");
  sc_sv->add_option("--format", sv_cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sc_sv->add_option("--output", sv_cfg.output, "output path or -");

  MomentsConfig mo_cfg;
  auto* sc_mo = app.add_subcommand(
      "moments", "Excursion-walk moment table E*[M^j], E*[binom(M,j)]");
  sc_mo->add_option("--n", mo_cfg.n, "walk length")->required();
  sc_mo->add_option("--k", mo_cfg.k, "highest moment order")->required();
  bool exact_flag = false;
  sc_mo->add_flag("--exact", exact_flag, "exact rational DP (default)");
  sc_mo->add_flag("--float", mo_cfg.use_float,
                  "floating-point DP for large n");
  sc_mo->add_option("--exact-ceiling", mo_cfg.exact_ceiling,
                    "exact-DP size ceiling");
  sc_mo->add_option("--threads", mo_cfg.threads, "DP threads (0 = default)");
  sc_mo->add_option("--format", mo_cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sc_mo->add_option("--output", mo_cfg.output, "output path or -");

  SimulateConfig si_cfg;
  auto* sc_si = app.add_subcommand(
      "simulate", "Monte Carlo moments of walks or excursion areas");
  sc_si->add_option("--kind", si_cfg.kind, "walk or excursion")
      ->required()
      ->check(CLI::IsMember({"walk", "excursion"}));
  sc_si->add_option("--n", si_cfg.n, "walk length (kind=walk)");
  sc_si->add_option("--grid", si_cfg.grid, "grid size (kind=excursion)");
  sc_si->add_option("--k", si_cfg.k, "highest moment order");
  sc_si->add_option("--samples", si_cfg.samples, "sample count")->required();
  sc_si->add_option("--seed", si_cfg.seed,
                    "unsigned seed or 'fixed-zero-hook'");
  sc_si->add_option("--workers", si_cfg.workers,
                    "independent sample streams");
  sc_si->add_option("--quadrature", si_cfg.quadrature, "left or trapezoid")
      ->check(CLI::IsMember({"left", "trapezoid"}));
  sc_si->add_option("--format", si_cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sc_si->add_option("--output", si_cfg.output, "output path or -");

  ConvergeConfig cv_cfg;
  auto* sc_cv = app.add_subcommand(
      "converge", "Ratio diagnostics along an ascending n-ladder");
  sc_cv->add_option("--k", cv_cfg.k, "moment order")->required();
  sc_cv->add_option("--ladder", cv_cfg.ladder, "comma-separated n values")
      ->required();
  sc_cv->add_option("--ratio", cv_cfg.ratio,
                    "all, thm1, mc-limit, or binom-raw")
      ->check(CLI::IsMember({"all", "thm1", "mc-limit", "binom-raw"}));
  sc_cv->add_option("--samples", cv_cfg.samples, "MC sample count");
  sc_cv->add_option("--grid", cv_cfg.grid, "MC grid size");
  sc_cv->add_option("--seed", cv_cfg.seed,
                    "unsigned seed or 'fixed-zero-hook'");
  sc_cv->add_option("--workers", cv_cfg.workers, "MC sample streams");
  sc_cv->add_option("--emit-plot-data", cv_cfg.plot_path,
                    "write (1/sqrt(n), scaled moment) pairs to this file");
  sc_cv->add_option("--format", cv_cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sc_cv->add_option("--output", cv_cfg.output, "output path or -");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sc_count->parsed()) return cmd_count(count_cfg, out, err);
    if (sc_sv->parsed()) return cmd_spencer_verify(sv_cfg, out, err);
    if (sc_mo->parsed()) {
      if (exact_flag && mo_cfg.use_float) {
        err << "error: --exact and --float are mutually exclusive\n";
        return 1;
      }
      return cmd_moments(mo_cfg, out, err);
    }
    if (sc_si->parsed()) return cmd_simulate(si_cfg, out, err);
    if (sc_cv->parsed()) return cmd_converge(cv_cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace excount::cli
