// Serial-reference vs OpenMP-kernel timings. Each pair must agree exactly
// (bit-identical estimates, equal counts); the table prints best-of-rep
// wall times and the speedup. On a single-core host expect ~1.0x.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "excount/exact_moments.hpp"
#include "excount/graph_counts.hpp"
#include "excount/simulate.hpp"

using namespace excount;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    fn();
    best = std::min(
        best, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  return best;
}

void report(const std::string& kernel, double serial_s, double parallel_s,
            bool agree) {
  std::printf("%-36s %9.3f s %9.3f s %7.2fx   %s\n", kernel.c_str(),
              serial_s, parallel_s, serial_s / parallel_s,
              agree ? "exact" : "MISMATCH");
}

}  // namespace

int main() {
  const int hw = std::max(1u, std::thread::hardware_concurrency());
  std::printf("hardware threads: %d%s\n\n", hw,
              hw == 1 ? " (expect speedups near 1.0x)" : "");
  std::printf("%-36s %11s %11s %8s   %s\n", "kernel", "serial", "parallel",
              "speedup", "agreement");

  {  // float DP over (step, queue) states, threaded across queue values
    DpOptions serial_opt, par_opt;
    serial_opt.arithmetic = par_opt.arithmetic = Arithmetic::floating;
    serial_opt.threads = 1;
    par_opt.threads = hw;
    MomentTable a, b;
    const double ts = best_of(3, [&] { a = dp_moments(400, 4, serial_opt); });
    const double tp = best_of(3, [&] { b = dp_moments(400, 4, par_opt); });
    report("float-dp-moments n=400 k=4", ts, tp,
           a.raw_f == b.raw_f && a.log_total_weight == b.log_total_weight);
  }

  {  // conditioned-walk sampler, one RNG stream per worker
    EstimateOptions opt;
    opt.k = 2;
    opt.samples = 200000;
    opt.workers = hw;
    EstimateReport a, b;
    const double ts = best_of(
        3, [&] { a = estimate_moments_serial(SampleKind::walk, 50, opt); });
    const double tp =
        best_of(3, [&] { b = estimate_moments(SampleKind::walk, 50, opt); });
    report("walk-estimate n=50 N=2e5", ts, tp,
           a.mean == b.mean && a.std_error == b.std_error);
  }

  {  // bridge + rotation + area pipeline on a fine grid
    EstimateOptions opt;
    opt.k = 2;
    opt.samples = 20000;
    opt.workers = hw;
    EstimateReport a, b;
    const double ts = best_of(3, [&] {
      a = estimate_moments_serial(SampleKind::excursion, 1000, opt);
    });
    const double tp = best_of(
        3, [&] { b = estimate_moments(SampleKind::excursion, 1000, opt); });
    report("excursion-estimate m=1000 N=2e4", ts, tp,
           a.mean == b.mean && a.std_error == b.std_error);
  }

  {  // exhaustive edge-subset enumeration, chunked combination order
    BruteForceOptions opt;
    opt.max_n = 8;
    opt.threads = hw;
    BigInt a, b;
    const double ts =
        best_of(1, [&] { a = brute_force_count_serial(8, 4, opt); });
    const double tp = best_of(1, [&] { b = brute_force_count(8, 4, opt); });
    report("brute-force-count n=8 k=4", ts, tp, a == b);
  }

  return 0;
}
