#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "excount/exact_moments.hpp"
#include "excount/numeric.hpp"

namespace excount {

struct RatioDiagnostic {
  int n = 0;
  int k = 0;
  std::string numerator_source;    // where the count came from
  std::string denominator_source;  // where ea_k came from
  double ratio = 0.0;
  double log_count = 0.0;  // inputs echoed
  double ea_k = 0.0;
};

struct ErrorBoundParams {
  double c1 = 0.0;
  double c2 = 0.0;
};

struct LogValue {
  double log_value = 0.0;
  std::optional<double> value;  // only when representable as a double
};

// Least-squares fit of y against 1/sqrt(n); the intercept estimates the
// n -> infinity limit.
struct ExtrapolationResult {
  double intercept = 0.0;
  double slope = 0.0;
  double residual_rms = 0.0;
};

// 3 sqrt(2) k (k/(12e))^{k/2}; the k-th excursion-area moment in the large-k
// regime. Log-space internally.
double excursion_moment_asymptotic(int k);
double excursion_moment_asymptotic_log(int k);

// n^{n-2} n^{3k/2} (e/12k)^{k/2} (3/sqrt(pi)) k^{1/2}; overflows double for
// modest n, hence the LogValue return. k = 0 is out of the formula's range
// (use n^{n-2} directly).
LogValue count_asymptotic(int n, int k);

// k! * count / (n^{n+3k/2-2} * ea_k), in log space from the exact integer.
RatioDiagnostic theorem1_ratio(int n, int k, const BigInt& count, double ea_k,
                               const std::string& numerator_source = "",
                               const std::string& denominator_source = "");

// k! E*[binom(M,k)] / E*[M^k]; tends to 1 as n grows. Throws for the
// degenerate n=2 table (zero raw moments).
double binomial_vs_raw_ratio(const MomentTable& t, int k);

// C1 log(n)/sqrt(n) + C2 k/sqrt(n), the error-bound shape for plots.
double error_bound_curve(const ErrorBoundParams& p, int n, int k);

// points: (n, value) pairs, at least two distinct n.
ExtrapolationResult extrapolate_vs_inv_sqrt(
    const std::vector<std::pair<int, double>>& points);

}  // namespace excount
