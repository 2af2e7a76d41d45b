#include "excount/paths.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <utility>

namespace excount {

StepSequence::StepSequence(std::vector<long long> steps)
    : steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("empty step sequence");
  for (long long s : steps_)
    if (s < -1) throw std::invalid_argument("step below -1");
}

long long StepSequence::sum() const {
  long long t = 0;
  for (long long s : steps_) t += s;
  return t;
}

QueueWalk queue_walk(const std::vector<long long>& z) {
  if (z.empty()) throw std::invalid_argument("empty step sequence");
  QueueWalk w;
  w.z = z;
  w.q.reserve(z.size() + 1);
  w.q.push_back(1);
  long long cur = 1;
  const std::size_t n = z.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i] < 0) throw std::invalid_argument("negative event count");
    cur += z[i] - 1;
    w.q.push_back(cur);
    if (i + 1 < n) w.m += cur - 1;  // M sums Q_1 .. Q_{n-1}
  }
  return w;
}

bool is_excursion(const QueueWalk& w) {
  const std::size_t n = w.z.size();
  for (std::size_t i = 1; i < n; ++i)
    if (w.q[i] <= 0) return false;
  return w.q[n] == 0;
}

StepSequence cyclic_shift(const StepSequence& x, std::size_t i) {
  const std::size_t n = x.size();
  if (i > n) throw std::out_of_range("cyclic shift index exceeds length");
  std::vector<long long> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = x[(i + j) % n];
  return StepSequence(std::move(out));
}

RerootResult reroot_at_min(const StepSequence& x) {
  if (x.sum() != -1) throw std::invalid_argument("not a bridge sequence");
  const std::size_t n = x.size();
  long long run = 0, best = 0;
  std::size_t sigma = 0;
  for (std::size_t j = 0; j < n; ++j) {
    run += x[j];
    if (sigma == 0 || run < best) {
      best = run;
      sigma = j + 1;  // first argmin wins
    }
  }
  return RerootResult{cyclic_shift(x, sigma), sigma};
}

EmpiricalProcessSample empirical_bridge(const std::vector<double>& uniforms) {
  const int n = static_cast<int>(uniforms.size()) + 1;
  std::vector<long long> counts(n, 0);  // half-open bins [(i-1)/n, i/n)
  for (double u : uniforms) {
    if (!(u >= 0.0 && u < 1.0))
      throw std::invalid_argument("uniform outside [0,1)");
    auto idx = static_cast<std::size_t>(u * n);
    if (idx >= static_cast<std::size_t>(n)) idx = n - 1;  // rounding guard
    ++counts[idx];
  }
  EmpiricalProcessSample s;
  s.uniforms = uniforms;
  s.n = n;
  s.f_at_grid.resize(n + 1);
  s.f_at_grid[0] = 0;
  long long acc = 0;
  for (int k = 1; k <= n; ++k) {
    acc += counts[k - 1] - 1;
    s.f_at_grid[k] = acc;
  }
  return s;
}

StepSequence EmpiricalProcessSample::step_sequence() const {
  std::vector<long long> steps(n);
  for (int k = 1; k <= n; ++k) steps[k - 1] = f_at_grid[k] - f_at_grid[k - 1];
  return StepSequence(std::move(steps));
}

ScaledPath scaled_path(const QueueWalk& w) {
  const std::size_t n = w.z.size();
  if (n < 2) throw std::invalid_argument("path needs at least two steps");
  ScaledPath p;
  p.scale = 1.0 / std::sqrt(static_cast<double>(n - 1));
  p.values.resize(n - 1);
  for (std::size_t i = 1; i < n; ++i)
    p.values[i - 1] = static_cast<double>(w.q[i] - 1) * p.scale;
  return p;
}

double scaled_area(const QueueWalk& w) {
  const std::size_t n = w.z.size();
  if (n < 2) throw std::invalid_argument("path needs at least two steps");
  if (!is_excursion(w))
    std::cerr << "warning: scaled_area on a non-excursion walk\n";
  const double d = static_cast<double>(n - 1);
  return static_cast<double>(w.m) / (d * std::sqrt(d));
}

}  // namespace excount
