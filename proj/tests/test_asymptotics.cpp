#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "excount/asymptotics.hpp"
#include "excount/exact_moments.hpp"
#include "excount/graph_counts.hpp"
#include "excount/numeric.hpp"

using namespace excount;

TEST_CASE("excursion moment asymptotic: direct evaluations") {
  // 3*sqrt(2)*k*(k/(12e))^{k/2} evaluated independently
  CHECK(excursion_moment_asymptotic(1) ==
        doctest::Approx(0.742845314824805).epsilon(1e-13));
  CHECK(excursion_moment_asymptotic(2) ==
        doctest::Approx(std::sqrt(2.0) / std::exp(1.0)).epsilon(1e-13));
  CHECK(excursion_moment_asymptotic(10) ==
        doctest::Approx(0.11488348799982832).epsilon(1e-13));
  CHECK(excursion_moment_asymptotic_log(50) ==
        doctest::Approx(16.03511777537987).epsilon(1e-13));
  CHECK_THROWS_AS(excursion_moment_asymptotic(0), std::invalid_argument);
  CHECK_THROWS_AS(excursion_moment_asymptotic(-2), std::invalid_argument);
}

TEST_CASE("log and direct evaluations agree where direct does not overflow") {
  for (int k = 1; k <= 60; ++k) {
    const double direct = excursion_moment_asymptotic(k);
    const double via_log = std::exp(excursion_moment_asymptotic_log(k));
    CHECK(std::fabs(direct - via_log) <= 1e-12 * direct);
  }
}

TEST_CASE("count asymptotic: log value and small-n prefactor") {
  // symbolic substitution at n=100, k=2:
  // (100-2+3) ln 100 + ln(e/24) + ln(3/sqrt(pi)) + (1/2) ln 2
  LogValue lv = count_asymptotic(100, 2);
  CHECK(lv.log_value == doctest::Approx(463.8169558904727).epsilon(1e-13));
  REQUIRE(lv.value.has_value());  // ~1.4e201 still fits in a double
  CHECK(std::log(*lv.value) == doctest::Approx(lv.log_value).epsilon(1e-13));

  LogValue huge = count_asymptotic(200, 1);  // log ~ 1066, past double range
  CHECK_FALSE(huge.value.has_value());
  CHECK(huge.log_value > 700.0);

  // at k=1 the formula reads n^{n-2} n^{3/2} (e/12)^{1/2} (3/sqrt(pi))
  for (int n : {5, 20, 80}) {
    CAPTURE(n);
    LogValue v = count_asymptotic(n, 1);
    const double log_prefac =
        v.log_value - (n - 2 + 1.5) * std::log(static_cast<double>(n));
    CHECK(std::exp(log_prefac) ==
          doctest::Approx(0.8055693542918567).epsilon(1e-12));
  }

  LogValue small = count_asymptotic(4, 1);
  REQUIRE(small.value.has_value());
  CHECK(*small.value == doctest::Approx(std::exp(small.log_value)).epsilon(1e-12));

  CHECK_THROWS_AS(count_asymptotic(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(count_asymptotic(10, 0), std::invalid_argument);
}

TEST_CASE("count asymptotic log value increases in n for fixed k") {
  for (int k : {1, 3, 7}) {
    double prev = count_asymptotic(2, k).log_value;
    for (int n = 3; n <= 200; ++n) {
      const double cur = count_asymptotic(n, k).log_value;
      REQUIRE(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("theorem1_ratio: hand value and scaling identity") {
  // k!*count/(n^{n+3k/2-2} ea_k) at (4, 1, 15, 0.18042): 15/(4^{7/2}*0.18042)
  RatioDiagnostic d = theorem1_ratio(4, 1, BigInt(15), 0.18042, "hand", "dp");
  CHECK(d.ratio == doctest::Approx(0.6495261057532424).epsilon(1e-12));
  CHECK(d.numerator_source == "hand");
  CHECK(d.denominator_source == "dp");
  CHECK(d.ea_k == 0.18042);
  CHECK(d.log_count == doctest::Approx(std::log(15.0)).epsilon(1e-13));

  // doubling ea_k halves the ratio exactly (up to float division)
  RatioDiagnostic h = theorem1_ratio(4, 1, BigInt(15), 2 * 0.18042);
  CHECK(h.ratio == doctest::Approx(d.ratio / 2).epsilon(1e-14));

  CHECK_THROWS_AS(theorem1_ratio(4, 1, BigInt(0), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_ratio(4, 1, BigInt(15), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_ratio(4, 1, BigInt(-3), 1.0), std::invalid_argument);
}

TEST_CASE("theorem1_ratio approaches 1 with exact counts and extrapolated limit") {
  const std::vector<int> ladder = {50, 100, 200, 400};
  DpOptions fopt;
  fopt.arithmetic = Arithmetic::floating;
  std::vector<std::pair<int, double>> pts;
  for (int n : ladder) {
    MomentTable t = dp_moments(n, 1, fopt);
    pts.emplace_back(n, t.raw_f[1] * std::pow(n - 1.0, -1.5));
  }
  const ExtrapolationResult fit = extrapolate_vs_inv_sqrt(pts);

  // Exact counts from the identity-based DP; tied to the independent
  // recurrence at one ladder point (full cross-check lives elsewhere).
  GraphCountTable cache;
  double prev_dist = -1.0;
  for (int n : ladder) {
    CAPTURE(n);
    DpOptions eopt;
    eopt.exact_ceiling = n;
    const BigInt count = spencer_count(n, 1, eopt);
    if (n == 100) CHECK(count == recurrence_count(100, 1, cache));
    const RatioDiagnostic d = theorem1_ratio(n, 1, count, fit.intercept);
    const double dist = std::fabs(d.ratio - 1.0);
    if (prev_dist >= 0.0) CHECK(dist < prev_dist);
    prev_dist = dist;
  }
  CHECK(prev_dist < 0.20);  // n=400 lands well inside 20% of the limit
}

TEST_CASE("binomial_vs_raw_ratio: exact small-n values and trend") {
  MomentTable t4 = dp_moments(4, 2);
  binomial_moments(t4);
  CHECK(binomial_vs_raw_ratio(t4, 1) == 1.0);  // binom(M,1) = M identically
  CHECK(binomial_vs_raw_ratio(t4, 2) ==
        doctest::Approx(4.0 / 9.0).epsilon(1e-15));

  DpOptions fopt;
  fopt.arithmetic = Arithmetic::floating;
  double prev = 0.0;
  for (int n : {10, 20, 40, 80}) {
    CAPTURE(n);
    MomentTable t = dp_moments(n, 2, fopt);
    binomial_moments(t);
    const double r = binomial_vs_raw_ratio(t, 2);
    CHECK(r > prev);
    CHECK(r < 1.0);
    prev = r;
  }

  MomentTable t2 = dp_moments(2, 2);
  binomial_moments(t2);
  CHECK_THROWS_AS(binomial_vs_raw_ratio(t2, 2), std::domain_error);

  MomentTable no_binom = dp_moments(4, 2);
  CHECK_THROWS_AS(binomial_vs_raw_ratio(no_binom, 2), std::logic_error);
  CHECK_THROWS_AS(binomial_vs_raw_ratio(t4, 3), std::invalid_argument);
}

TEST_CASE("error_bound_curve evaluates the stated shape") {
  const int n_e2 = static_cast<int>(std::exp(2.0) + 0.5);  // nearest int to e^2
  const double at_e2 = error_bound_curve({1.0, 0.0}, n_e2, 3);
  CHECK(at_e2 == doctest::Approx(std::log(static_cast<double>(n_e2)) /
                                 std::sqrt(static_cast<double>(n_e2)))
                     .epsilon(1e-15));
  CHECK(error_bound_curve({0.0, 1.0}, 100, 5) == doctest::Approx(0.5));
  CHECK(error_bound_curve({0.0, 0.0}, 17, 9) == 0.0);
  CHECK_THROWS_AS(error_bound_curve({-1.0, 0.0}, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(error_bound_curve({1.0, 1.0}, 1, 1), std::invalid_argument);
}

TEST_CASE("extrapolation recovers an exact affine law in 1/sqrt(n)") {
  // y = 2.5 - 1.75/sqrt(n), sampled at four n values
  std::vector<std::pair<int, double>> pts;
  for (int n : {25, 100, 400, 2500})
    pts.emplace_back(n, 2.5 - 1.75 / std::sqrt(static_cast<double>(n)));
  ExtrapolationResult fit = extrapolate_vs_inv_sqrt(pts);
  CHECK(fit.intercept == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(fit.slope == doctest::Approx(-1.75).epsilon(1e-12));
  CHECK(fit.residual_rms <= 1e-12);

  CHECK_THROWS_AS(extrapolate_vs_inv_sqrt({{10, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(extrapolate_vs_inv_sqrt({{10, 1.0}, {10, 2.0}}),
                  std::invalid_argument);
}

TEST_CASE("asymptotic formulas are mutually consistent via Stirling") {
  // The two formulas differ by exactly k!/(sqrt(2 pi k) (k/e)^k); in log
  // space the residual after removing that correction must vanish.
  for (int n : {3, 10, 100}) {
    for (int k = 1; k <= 50; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const double d = count_asymptotic(n, k).log_value -
                       (n + 1.5 * k - 2) * std::log(static_cast<double>(n)) +
                       std::lgamma(k + 1.0) - excursion_moment_asymptotic_log(k);
      const double stirling = std::lgamma(k + 1.0) -
                              k * std::log(k / std::exp(1.0)) -
                              0.5 * std::log(2 * M_PI * k);
      REQUIRE(std::fabs(d - stirling) < 1e-9);
    }
  }
}
