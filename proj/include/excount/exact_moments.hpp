#pragma once

#include <vector>

#include "excount/numeric.hpp"

namespace excount {

enum class Arithmetic { exact, floating };

struct DpOptions {
  Arithmetic arithmetic = Arithmetic::exact;
  // Exact mode refuses n above this; raise it deliberately for big runs.
  int exact_ceiling = 60;
  int threads = 0;  // 0 = runtime default
};

// Conditional moments of the area statistic M over Poisson-weighted
// excursion walks of length n. Exact tables carry rationals; float tables
// carry doubles plus log W(n). The float twins raw_f/binomial_f are filled
// in both modes.
struct MomentTable {
  int n = 0;
  int k_max = 0;
  bool exact = true;
  std::vector<BigRat> raw;       // E*[M^j], j = 0..k_max
  std::vector<BigRat> binomial;  // E*[binom(M,j)], filled by binomial_moments
  std::vector<double> raw_f;
  std::vector<double> binomial_f;
  BigRat total_weight;            // W(n) = sum over excursions of prod 1/z_i!
  double log_total_weight = 0.0;  // log W(n)

  double raw_value(int j) const;
  double binomial_value(int j) const;
};

// Signed Stirling numbers of the first kind, s(k,j) for 0 <= j <= k <= k_max.
struct StirlingTriangle {
  int k_max = 0;
  std::vector<std::vector<BigInt>> s;

  static StirlingTriangle build(int k_max);
  const BigInt& operator()(int k, int j) const { return s[k][j]; }
};

// One pass of the excursion DP: states (step i, queue value q) with
// 1 <= q <= n-i, transitions q -> q + z - 1 weighted 1/z!. Fills raw
// moments and the total weight; call binomial_moments for the binomial
// column. The common e^{-n} Poisson factor cancels and is never formed.
MomentTable dp_moments(int n, int k, const DpOptions& opt = {});

// E*[binom(M,j)] = (1/j!) sum_i s(j,i) E*[M^i] (falling-factorial expansion).
void binomial_moments(MomentTable& t);

// n^{n-2} * E*[binom(M,k)], asserted integral. Out-of-range k returns 0
// with a warning.
BigInt spencer_count(int n, int k, const DpOptions& opt = {});

// All of k = 0..k_max from a single DP pass.
std::vector<BigInt> spencer_count_row(int n, int k_max,
                                      const DpOptions& opt = {});

// W(n); equals n^{n-2}/(n-1)!. No size ceiling (weight-only DP is cheap).
BigRat excursion_weight(int n);

}  // namespace excount
