#include "excount/simulate.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace excount {

QueueWalk walk_from_uniforms(const std::vector<double>& uniforms) {
  const auto sample = empirical_bridge(uniforms);
  const auto rooted = reroot_at_min(sample.step_sequence());
  std::vector<long long> z(rooted.shifted.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = rooted.shifted[i] + 1;
  return queue_walk(z);
}

QueueWalk sample_conditioned_walk(int n, RngStream& rng) {
  if (n < 2)
    throw std::invalid_argument("sample_conditioned_walk: n must be >= 2");
  std::vector<double> u(n - 1);
  for (double& x : u) x = rng.uniform01();
  return walk_from_uniforms(u);
}

GridBridge bridge_from_normals(int m, const std::vector<double>& increments) {
  if (m < 2) throw std::invalid_argument("bridge grid must have m >= 2");
  if (static_cast<int>(increments.size()) != m)
    throw std::invalid_argument("bridge needs exactly m increments");
  GridBridge b;
  b.m = m;
  b.values.resize(m + 1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  double beta = 0.0;
  b.values[0] = 0.0;
  for (int i = 1; i <= m; ++i) {
    beta += increments[i - 1] * scale;
    b.values[i] = beta;
  }
  const double drift = b.values[m];
  for (int i = 1; i < m; ++i)
    b.values[i] -= (static_cast<double>(i) / m) * drift;
  b.values[m] = 0.0;  // beta_m - (m/m) beta_m, exactly
  return b;
}

GridBridge sample_bridge(int m, RngStream& rng) {
  if (m < 2) throw std::invalid_argument("bridge grid must have m >= 2");
  std::vector<double> inc(m);
  for (double& x : inc) x = rng.normal();
  return bridge_from_normals(m, inc);
}

GridExcursion vervaat(const GridBridge& b) {
  const int m = b.m;
  int sigma = 0;
  for (int i = 1; i <= m; ++i)
    if (b.values[i] < b.values[sigma]) sigma = i;  // first argmin wins
  GridExcursion e;
  e.m = m;
  e.values.resize(m + 1);
  if (sigma == 0 || sigma == m) {  // already nonnegative; identity
    e.values = b.values;
    return e;
  }
  const double low = b.values[sigma];
  for (int j = 0; j <= m; ++j)
    e.values[j] = b.values[(sigma + j) % m] - low;
  e.values[0] = 0.0;
  e.values[m] = 0.0;
  return e;
}

double excursion_area(const GridExcursion& e, Quadrature q) {
  const int m = e.m;
  double acc = 0.0;
  if (q == Quadrature::left) {
    for (int i = 0; i < m; ++i) acc += e.values[i];
  } else {
    for (int i = 0; i < m; ++i)
      acc += 0.5 * (e.values[i] + e.values[i + 1]);
  }
  return acc / m;
}

namespace {

double walk_sample(int n, RngStream& rng, const EstimateOptions& opt,
                   std::vector<double>& scratch) {
  if (opt.zero_noise) {
    scratch.assign(n - 1, 0.5);
  } else {
    scratch.resize(n - 1);
    for (double& x : scratch) x = rng.uniform01();
  }
  return scaled_area(walk_from_uniforms(scratch));
}

double excursion_sample(int m, RngStream& rng, const EstimateOptions& opt,
                        std::vector<double>& scratch) {
  if (opt.zero_noise) {
    scratch.assign(m, 0.0);
  } else {
    scratch.resize(m);
    for (double& x : scratch) x = rng.normal();
  }
  return excursion_area(vervaat(bridge_from_normals(m, scratch)),
                        opt.quadrature);
}

EstimateReport estimate_impl(SampleKind kind, int size,
                             const EstimateOptions& opt, bool parallel) {
  if (opt.samples < 1)
    throw std::invalid_argument("estimate_moments: need at least one sample");
  if (opt.k < 1) throw std::invalid_argument("estimate_moments: k must be >= 1");
  if (size < 2) throw std::invalid_argument("estimate_moments: size must be >= 2");
  if (opt.workers < 1)
    throw std::invalid_argument("estimate_moments: workers must be >= 1");

  const int k = opt.k;
  const int workers = opt.workers;
  const long long n_samples = opt.samples;
  // partial power sums per chunk: sums[c][j-1] of x^j, sq[c][j-1] of x^{2j}
  std::vector<std::vector<double>> sums(workers, std::vector<double>(k, 0.0));
  std::vector<std::vector<double>> sq(workers, std::vector<double>(k, 0.0));

#pragma omp parallel for schedule(static, 1) num_threads(workers) \
    if (parallel)
  for (int c = 0; c < workers; ++c) {
    const long long lo = n_samples * c / workers;
    const long long hi = n_samples * (c + 1) / workers;
    RngStream rng(opt.seed, static_cast<std::uint64_t>(c));
    std::vector<double> scratch;
    auto& s = sums[c];
    auto& s2 = sq[c];
    for (long long r = lo; r < hi; ++r) {
      const double x = (kind == SampleKind::walk)
                           ? walk_sample(size, rng, opt, scratch)
                           : excursion_sample(size, rng, opt, scratch);
      double p = 1.0;
      for (int j = 0; j < k; ++j) {
        p *= x;
        s[j] += p;
        s2[j] += p * p;
      }
    }
  }

  EstimateReport rep;
  rep.estimand = (kind == SampleKind::walk) ? "walk" : "excursion";
  rep.size = size;
  rep.k = k;
  rep.samples = n_samples;
  rep.seed = opt.seed;
  rep.workers = workers;
  rep.quadrature = opt.quadrature;
  rep.zero_noise = opt.zero_noise;
  rep.mean.assign(k, 0.0);
  rep.std_error.assign(k, 0.0);
  const double nd = static_cast<double>(n_samples);
  for (int j = 0; j < k; ++j) {
    double s = 0.0, s2 = 0.0;
    for (int c = 0; c < workers; ++c) {  // fixed chunk order
      s += sums[c][j];
      s2 += sq[c][j];
    }
    const double mean = s / nd;
    rep.mean[j] = mean;
    if (n_samples > 1) {
      const double var =
          std::max(0.0, (s2 - nd * mean * mean) / (nd - 1.0));
      rep.std_error[j] = std::sqrt(var / nd);
    }
  }
  return rep;
}

}  // namespace

EstimateReport estimate_moments(SampleKind kind, int size,
                                const EstimateOptions& opt) {
  return estimate_impl(kind, size, opt, true);
}

EstimateReport estimate_moments_serial(SampleKind kind, int size,
                                       const EstimateOptions& opt) {
  return estimate_impl(kind, size, opt, false);
}

// ---------------------------------------------------------------------------
// coupling_gap
//
// With n uniforms, F(t) = #{U_i <= t} - (n+1) t. The step path takes the
// value F(k/(n+1))/sqrt(n) on [k/(n+1), (k+1)/(n+1)) (last piece closed at
// t=1), and G(t) = (#{U_i <= t} - n t)/sqrt(n). Their difference has slope
// +n/sqrt(n) between breakpoints, so the supremum of |X - G| is attained at
// a breakpoint value or left limit; we evaluate every one of them.
// ---------------------------------------------------------------------------
double coupling_gap(const std::vector<double>& uniforms) {
  const int n = static_cast<int>(uniforms.size());
  if (n < 1) throw std::invalid_argument("coupling_gap: need at least one uniform");
  for (double u : uniforms)
    if (!(u >= 0.0 && u < 1.0))
      throw std::invalid_argument("uniform outside [0,1)");

  struct Event {
    double t;
    int grid;  // grid index k, or -1 for a uniform event
  };
  std::vector<Event> ev;
  ev.reserve(uniforms.size() + n + 2);
  for (int kk = 0; kk <= n + 1; ++kk)
    ev.push_back({static_cast<double>(kk) / (n + 1), kk});
  for (double u : uniforms) ev.push_back({u, -1});
  std::stable_sort(ev.begin(), ev.end(),
                   [](const Event& a, const Event& b) { return a.t < b.t; });

  const double root_n = std::sqrt(static_cast<double>(n));
  long long cnt = 0;  // #{U_i <= current position}
  double f_cur = 0.0; // F at the current piece's grid point
  double best = 0.0;

  std::size_t i = 0;
  while (i < ev.size()) {
    const double t = ev[i].t;
    // left limit: old piece, uniforms at t not yet counted
    if (t > 0.0) {
      const double g_left = (static_cast<double>(cnt) - n * t) / root_n;
      best = std::max(best, std::fabs(f_cur / root_n - g_left));
    }
    int grid_k = -1;
    for (; i < ev.size() && ev[i].t == t; ++i) {
      if (ev[i].grid >= 0)
        grid_k = ev[i].grid;
      else
        ++cnt;
    }
    if (grid_k >= 0 && grid_k <= n)  // t = 1 keeps the last piece
      f_cur = static_cast<double>(cnt) - grid_k;
    const double g_right = (static_cast<double>(cnt) - n * t) / root_n;
    best = std::max(best, std::fabs(f_cur / root_n - g_right));
  }
  return best;
}

}  // namespace excount
