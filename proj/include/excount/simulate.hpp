#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "excount/paths.hpp"
#include "excount/rng.hpp"

namespace excount {

// Real-valued path on the uniform grid {0, 1/m, ..., 1}; endpoints exactly 0.
struct GridBridge {
  int m = 0;
  std::vector<double> values;  // size m+1
};

// Nonnegative grid path, endpoints exactly 0.
struct GridExcursion {
  int m = 0;
  std::vector<double> values;  // size m+1
};

enum class SampleKind { walk, excursion };
enum class Quadrature { left, trapezoid };

struct EstimateOptions {
  int k = 1;
  long long samples = 0;
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
  Quadrature quadrature = Quadrature::left;
  // Test hook: replaces every normal draw with 0 and every uniform with 0.5,
  // making the run fully deterministic without touching the RNG.
  bool zero_noise = false;
};

struct EstimateReport {
  std::string estimand;  // "walk" (M_n moments) or "excursion" (area moments)
  int size = 0;          // walk length n, or grid size m
  int k = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  Quadrature quadrature = Quadrature::left;
  bool zero_noise = false;
  std::vector<double> mean;       // index j-1 holds the j-th moment estimate
  std::vector<double> std_error;  // sample std / sqrt(N); 0 when N = 1
};

// Bridge-conditioned walk from explicit uniforms: bin the event times,
// re-root at the first argmin, rebuild the queue walk. Always an excursion.
QueueWalk walk_from_uniforms(const std::vector<double>& uniforms);

// Draws n-1 uniform event times and applies walk_from_uniforms.
QueueWalk sample_conditioned_walk(int n, RngStream& rng);

// b_i = beta_i - (i/m) beta_m from explicit standard-normal increments of
// the random walk beta (scaled by 1/sqrt(m)).
GridBridge bridge_from_normals(int m, const std::vector<double>& increments);

GridBridge sample_bridge(int m, RngStream& rng);

// Rotate the bridge increments at the first grid argmin:
// e_j = b[(sigma+j) mod m] - b[sigma]. Nonnegative with zero endpoints.
GridExcursion vervaat(const GridBridge& b);

double excursion_area(const GridExcursion& e,
                      Quadrature q = Quadrature::left);

EstimateReport estimate_moments(SampleKind kind, int size,
                                const EstimateOptions& opt);
// Reference implementation without the parallel pragma; must produce
// bit-identical reports.
EstimateReport estimate_moments_serial(SampleKind kind, int size,
                                       const EstimateOptions& opt);

// Exact sup_t |X(t) - G(t)| between the step path X built from the n given
// uniforms (grid n+1) and the empirical process G they induce. The sup is
// attained on the finite set of breakpoint values and left limits.
double coupling_gap(const std::vector<double>& uniforms);

}  // namespace excount
