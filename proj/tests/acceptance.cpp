// Release gate: one line per criterion, PASS/FAIL, exit code = #failures.
// Tolerances are pinned here on purpose; loosening them is a release
// decision, not a code style one.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "excount/asymptotics.hpp"
#include "excount/cli.hpp"
#include "excount/exact_moments.hpp"
#include "excount/graph_counts.hpp"
#include "excount/numeric.hpp"
#include "excount/paths.hpp"
#include "excount/rng.hpp"
#include "excount/simulate.hpp"

using namespace excount;

namespace {

long long feasible_k(int n) {
  return static_cast<long long>(n) * (n - 1) / 2 - n + 1;
}

BigInt n_to_n_minus_2(int n) {
  BigInt v = 1;
  for (int i = 0; i < n - 2; ++i) v *= n;
  return v;
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(4);
  ss << v;
  return ss.str();
}

// 1. Identity count vs brute force, exhaustive small grid, zero tolerance.
bool check_identity_vs_brute(std::string& detail) {
  for (int n = 2; n <= 7; ++n) {
    const int k_hi = static_cast<int>(feasible_k(n));
    const auto row = spencer_count_row(n, k_hi);
    for (int k = 0; k <= k_hi; ++k) {
      const BigInt brute = brute_force_count(n, k);
      if (row[k] != brute) {
        detail = "mismatch at n=" + std::to_string(n) +
                 " k=" + std::to_string(k) + ": " + row[k].str() + " vs " +
                 brute.str();
        return false;
      }
    }
  }
  detail = "n=2..7, every feasible k, zero tolerance";
  return true;
}

// 2. Recurrence vs identity DP, plus tree counts n^{n-2}.
bool check_count_oracles(std::string& detail) {
  GraphCountTable cache;
  for (int n = 2; n <= 40; ++n) {
    const int k_hi = static_cast<int>(std::min<long long>(10, feasible_k(n)));
    const auto row = spencer_count_row(n, k_hi);
    for (int k = 0; k <= k_hi; ++k) {
      if (recurrence_count(n, k, cache) != row[k]) {
        detail = "oracle split at n=" + std::to_string(n) +
                 " k=" + std::to_string(k);
        return false;
      }
    }
  }
  for (int n = 1; n <= 30; ++n) {
    if (recurrence_count(n, 0, cache) != n_to_n_minus_2(n)) {
      detail = "tree count wrong at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "n<=40 k<=10 exact; tree counts n<=30";
  return true;
}

// 3. DP total weight against the closed form n^{n-2}/(n-1)!.
bool check_weight_closed_form(std::string& detail) {
  for (int n = 2; n <= 100; ++n) {
    const BigRat expect(n_to_n_minus_2(n), factorial(n - 1));
    if (excursion_weight(n) != expect) {
      detail = "weight DP wrong at n=" + std::to_string(n);
      return false;
    }
    if (n <= 60 && dp_moments(n, 0).total_weight != expect) {
      detail = "moment DP weight wrong at n=" + std::to_string(n);
      return false;
    }
  }
  DpOptions fopt;
  fopt.arithmetic = Arithmetic::floating;
  double worst = 0.0;
  for (int n = 61; n <= 100; ++n) {
    const double lw =
        (n - 2) * std::log(static_cast<double>(n)) - std::lgamma(n);
    const double rel =
        std::fabs(dp_moments(n, 0, fopt).log_total_weight - lw) /
        std::fabs(lw);
    worst = std::max(worst, rel);
    if (rel > 1e-10) {
      detail = "float log weight off by " + fmt(rel) + " rel at n=" +
               std::to_string(n);
      return false;
    }
  }
  detail = "exact to n=100; float log weight rel err <= " + fmt(worst);
  return true;
}

// 4. Every random bridge has exactly one excursion-rooted rotation and
//    reroot_at_min finds it.
bool first_hits_minus_one_at_end(const StepSequence& s) {
  long long acc = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    acc += s[i];
    if (acc <= -1) return false;
  }
  return acc + s[s.size() - 1] == -1;
}

bool check_bridge_rotation(std::string& detail) {
  RngStream rng(kDefaultSeed, 901);
  int max_n = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 199);  // 2..200
    max_n = std::max(max_n, n);
    std::vector<double> u(n - 1);
    for (double& x : u) x = rng.uniform01();
    const StepSequence steps = empirical_bridge(u).step_sequence();
    int hits = 0;
    std::size_t where = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (first_hits_minus_one_at_end(cyclic_shift(steps, i))) {
        ++hits;
        where = i;
      }
    }
    if (hits != 1) {
      detail = "trial " + std::to_string(trial) + " (n=" + std::to_string(n) +
               "): " + std::to_string(hits) + " excursion-rooted shifts";
      return false;
    }
    if (reroot_at_min(steps).shifted.steps() !=
        cyclic_shift(steps, where).steps()) {
      detail = "reroot_at_min missed the unique shift at trial " +
               std::to_string(trial);
      return false;
    }
  }
  detail = "1000 bridges, n up to " + std::to_string(max_n) +
           ", unique rotation found every time";
  return true;
}

// 5. Sampler frequencies and means against the exact DP, 3 SE.
bool check_sampler_distribution(std::string& detail) {
  const long long trials = 1000000;
  RngStream rng(kDefaultSeed, 31);
  long long light = 0;  // walk (1,1,0), conditional weight 2/3
  std::vector<double> u(2);
  for (long long t = 0; t < trials; ++t) {
    u[0] = rng.uniform01();
    u[1] = rng.uniform01();
    if (walk_from_uniforms(u).z[0] == 1) ++light;
  }
  const double p = static_cast<double>(light) / trials;
  const double se3 = 3.0 * std::sqrt((2.0 / 3.0) * (1.0 / 3.0) / trials);
  if (std::fabs(p - 2.0 / 3.0) > se3) {
    detail = "n=3 frequency " + fmt(p) + " outside 2/3 +- " + fmt(se3);
    return false;
  }

  EstimateOptions opt;
  opt.k = 1;
  opt.samples = trials;
  opt.workers = 1;
  const EstimateReport rep = estimate_moments(SampleKind::walk, 4, opt);
  const double target = 0.18042195912175804;  // (15/16) / 3^{3/2}
  if (std::fabs(rep.mean[0] - target) > 3.0 * rep.std_error[0]) {
    detail = "n=4 mean " + fmt(rep.mean[0]) + " vs " + fmt(target) +
             " (3 SE = " + fmt(3.0 * rep.std_error[0]) + ")";
    return false;
  }
  detail = "n=3 freq gap " + fmt(std::fabs(p - 2.0 / 3.0)) + " (3 SE " +
           fmt(se3) + "); n=4 mean gap " +
           fmt(std::fabs(rep.mean[0] - target)) + " (3 SE " +
           fmt(3.0 * rep.std_error[0]) + ")";
  return true;
}

// 6. Scaled first moment: ladder extrapolation vs Monte Carlo limit, and
//    the count ratio marching toward 1.
bool check_limit_vs_mc(std::string& detail) {
  const std::vector<int> ladder{50, 100, 200, 400};
  DpOptions fopt;
  fopt.arithmetic = Arithmetic::floating;
  std::vector<std::pair<int, double>> pts;
  for (int n : ladder) {
    const MomentTable mt = dp_moments(n, 1, fopt);
    pts.emplace_back(n, mt.raw_value(1) * std::pow(n - 1.0, -1.5));
  }
  const ExtrapolationResult fit = extrapolate_vs_inv_sqrt(pts);

  EstimateOptions mo;
  mo.k = 1;
  mo.samples = 100000;
  mo.workers = 1;
  const EstimateReport mc = estimate_moments(SampleKind::excursion, 2000, mo);
  const double gap = std::fabs(fit.intercept - mc.mean[0]);
  const double allow = 3.0 * mc.std_error[0] + 0.02;
  if (gap > allow) {
    detail = "extrapolated " + fmt(fit.intercept) + " vs MC " +
             fmt(mc.mean[0]) + ": gap " + fmt(gap) + " > " + fmt(allow);
    return false;
  }

  DpOptions eopt;
  eopt.exact_ceiling = 400;
  double prev = std::numeric_limits<double>::infinity();
  double last = 0.0;
  for (int n : ladder) {
    const BigInt count = spencer_count(n, 1, eopt);
    last = theorem1_ratio(n, 1, count, fit.intercept).ratio;
    const double dist = std::fabs(last - 1.0);
    if (!(dist < prev)) {
      detail = "count ratio stalled at n=" + std::to_string(n) + " (" +
               fmt(last) + ")";
      return false;
    }
    prev = dist;
  }
  detail = "gap " + fmt(gap) + " <= " + fmt(allow) +
           "; ratio monotone toward 1, last " + fmt(last);
  return true;
}

// 7. k! E*[binom(M,k)] / E*[M^k] rises toward 1; exact 4/9 at n=4, k=2.
bool check_binomial_raw_trend(std::string& detail) {
  MomentTable m4 = dp_moments(4, 2);
  binomial_moments(m4);
  if (binomial_vs_raw_ratio(m4, 2) != 4.0 / 9.0) {
    detail = "n=4 ratio is " + fmt(binomial_vs_raw_ratio(m4, 2)) +
             ", expected 4/9";
    return false;
  }
  DpOptions fopt;
  fopt.arithmetic = Arithmetic::floating;
  double prev = 0.0;
  for (int n : {10, 20, 40, 80}) {
    MomentTable mt = dp_moments(n, 2, fopt);
    binomial_moments(mt);
    const double r = binomial_vs_raw_ratio(mt, 2);
    if (!(r > prev && r < 1.0)) {
      detail = "ratio not increasing below 1 at n=" + std::to_string(n);
      return false;
    }
    prev = r;
  }
  detail = "4/9 exact at n=4; rising to " + fmt(prev) + " at n=80";
  return true;
}

// 8. The two closed asymptotic forms differ by exactly the Stirling
//    correction of k!.
bool check_stirling_consistency(std::string& detail) {
  double worst = 0.0;
  for (int n : {3, 10, 100}) {
    for (int k = 1; k <= 50; ++k) {
      const double d =
          count_asymptotic(n, k).log_value -
          (n + 1.5 * k - 2) * std::log(static_cast<double>(n)) +
          std::lgamma(k + 1.0) - excursion_moment_asymptotic_log(k);
      const double stirling = std::lgamma(k + 1.0) -
                              k * std::log(k / std::exp(1.0)) -
                              0.5 * std::log(2 * M_PI * k);
      const double res = std::fabs(d - stirling);
      worst = std::max(worst, res);
      if (res >= 1e-9) {
        detail = "residual " + fmt(res) + " at n=" + std::to_string(n) +
                 " k=" + std::to_string(k);
        return false;
      }
    }
  }
  detail = "k <= 50, worst residual " + fmt(worst) + " < 1e-9";
  return true;
}

// 9. Identical (seed, workers, N) CLI runs emit byte-identical tables.
bool check_replay_determinism(std::string& detail) {
  const std::vector<std::vector<std::string>> runs = {
      {"simulate", "--kind", "excursion", "--grid", "100", "--k", "3",
       "--samples", "20000", "--seed", "424242", "--workers", "3"},
      {"simulate", "--kind", "walk", "--n", "12", "--k", "2", "--samples",
       "50000", "--seed", "7", "--workers", "2"},
  };
  for (const auto& args : runs) {
    std::ostringstream o1, e1, o2, e2;
    const int c1 = cli::run(args, o1, e1);
    const int c2 = cli::run(args, o2, e2);
    if (c1 != 0 || c2 != 0 || o1.str().empty() || o1.str() != o2.str()) {
      detail = "replay diverged for kind=" + args[2];
      return false;
    }
  }
  detail = "two kinds, two runs each, byte-identical";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int index;
    const char* name;
    std::function<bool(std::string&)> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "identity-count-vs-brute-force", check_identity_vs_brute},
      {2, "count-oracle-cross-check", check_count_oracles},
      {3, "excursion-weight-closed-form", check_weight_closed_form},
      {4, "bridge-rotation-uniqueness", check_bridge_rotation},
      {5, "sampler-vs-dp-distribution", check_sampler_distribution},
      {6, "scaled-moment-limit-vs-mc", check_limit_vs_mc},
      {7, "binomial-vs-raw-ratio-trend", check_binomial_raw_trend},
      {8, "asymptotic-stirling-consistency", check_stirling_consistency},
      {9, "simulate-replay-determinism", check_replay_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("%s  %d/9  %-32s %7.2fs  %s\n", ok ? "PASS" : "FAIL", c.index,
                c.name, secs, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("acceptance: all 9 criteria passed\n");
  else
    std::printf("acceptance: %d of 9 criteria FAILED\n", failures);
  return failures;
}
