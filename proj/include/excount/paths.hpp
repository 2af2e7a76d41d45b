#pragma once

#include <cstddef>
#include <vector>

namespace excount {

// Integer lattice walk increments, each >= -1 (i.e. z - 1 for event counts
// z >= 0). Immutable after construction.
class StepSequence {
 public:
  explicit StepSequence(std::vector<long long> steps);

  const std::vector<long long>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  long long operator[](std::size_t i) const { return steps_[i]; }
  long long sum() const;

 private:
  std::vector<long long> steps_;
};

// Q_0 = 1, Q_i = Q_{i-1} + (Z_i - 1); m = sum_{i=1..n-1} (Q_i - 1).
struct QueueWalk {
  std::vector<long long> z;  // event counts, size n
  std::vector<long long> q;  // queue values, size n+1
  long long m = 0;           // unscaled area statistic
};

struct RerootResult {
  StepSequence shifted;
  std::size_t sigma = 0;  // first argmin of partial sums, in 1..n
};

// Grid evaluations F(k/n) = #{U_i <= k/n} - k for k = 0..n, built from n-1
// uniforms; the increments form a bridge step sequence (entries >= -1,
// total -1).
struct EmpiricalProcessSample {
  std::vector<double> uniforms;
  std::vector<long long> f_at_grid;  // size n+1
  int n = 0;

  StepSequence step_sequence() const;
};

// Piecewise-constant diffusive rescaling of a queue walk: piece i-1 of n-1
// equal pieces of [0,1] carries (Q_i - 1)/sqrt(n-1).
struct ScaledPath {
  std::vector<double> values;  // size n-1
  double scale = 1.0;          // 1/sqrt(n-1)
};

QueueWalk queue_walk(const std::vector<long long>& z);

// True iff Q_i > 0 for 1 <= i <= n-1 and Q_n = 0.
bool is_excursion(const QueueWalk& w);

// Output entry j is x[(i+j) mod n]; shift by 0 or n is the identity.
StepSequence cyclic_shift(const StepSequence& x, std::size_t i);

// For a bridge sequence (entries >= -1, sum -1): rotate at the first argmin
// of partial sums. The result first hits -1 at step n, and the shift index
// achieving that is unique.
RerootResult reroot_at_min(const StepSequence& x);

EmpiricalProcessSample empirical_bridge(const std::vector<double>& uniforms);

ScaledPath scaled_path(const QueueWalk& w);

// M_n = m / (n-1)^{3/2}, the area of the rescaled path.
double scaled_area(const QueueWalk& w);

}  // namespace excount
