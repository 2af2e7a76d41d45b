#include "excount/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace excount {

double excursion_moment_asymptotic_log(int k) {
  if (k < 1)
    throw std::invalid_argument("excursion_moment_asymptotic: k must be >= 1");
  const double kd = k;
  return std::log(3.0) + 0.5 * std::log(2.0) + std::log(kd) +
         0.5 * kd * (std::log(kd) - std::log(12.0) - 1.0);
}

double excursion_moment_asymptotic(int k) {
  return std::exp(excursion_moment_asymptotic_log(k));
}

LogValue count_asymptotic(int n, int k) {
  if (n < 2) throw std::invalid_argument("count_asymptotic: n must be >= 2");
  if (k < 1)
    throw std::invalid_argument(
        "count_asymptotic: k must be >= 1 (k = 0 is n^{n-2})");
  const double nd = n, kd = k;
  LogValue out;
  out.log_value = (nd - 2.0 + 1.5 * kd) * std::log(nd) +
                  0.5 * kd * (1.0 - std::log(12.0) - std::log(kd)) +
                  std::log(3.0) - 0.5 * std::log(M_PI) + 0.5 * std::log(kd);
  if (out.log_value < std::log(std::numeric_limits<double>::max()))
    out.value = std::exp(out.log_value);
  return out;
}

RatioDiagnostic theorem1_ratio(int n, int k, const BigInt& count, double ea_k,
                               const std::string& numerator_source,
                               const std::string& denominator_source) {
  if (n < 2) throw std::invalid_argument("theorem1_ratio: n must be >= 2");
  if (k < 0) throw std::invalid_argument("theorem1_ratio: k must be >= 0");
  if (count <= 0)
    throw std::invalid_argument("theorem1_ratio: count must be positive");
  if (!(ea_k > 0.0))
    throw std::invalid_argument("theorem1_ratio: ea_k must be positive");
  RatioDiagnostic d;
  d.n = n;
  d.k = k;
  d.numerator_source = numerator_source;
  d.denominator_source = denominator_source;
  d.log_count = log_big(count);
  d.ea_k = ea_k;
  const double log_ratio = std::lgamma(k + 1.0) + d.log_count -
                           (n + 1.5 * k - 2.0) * std::log(double(n)) -
                           std::log(ea_k);
  d.ratio = std::exp(log_ratio);
  return d;
}

double binomial_vs_raw_ratio(const MomentTable& t, int k) {
  if (k < 1 || k > t.k_max)
    throw std::invalid_argument("binomial_vs_raw_ratio: k out of table range");
  if (t.exact) {
    if (t.binomial.empty())
      throw std::logic_error("binomial_vs_raw_ratio: call binomial_moments first");
    if (t.raw[k] == 0)
      throw std::domain_error(
          "binomial_vs_raw_ratio: degenerate table, E*[M^k] = 0");
    return to_double(BigRat(factorial(k)) * t.binomial[k] / t.raw[k]);
  }
  if (t.binomial_f.empty())
    throw std::logic_error("binomial_vs_raw_ratio: call binomial_moments first");
  if (t.raw_f[k] == 0.0)
    throw std::domain_error(
        "binomial_vs_raw_ratio: degenerate table, E*[M^k] = 0");
  return to_double(factorial(k)) * t.binomial_f[k] / t.raw_f[k];
}

double error_bound_curve(const ErrorBoundParams& p, int n, int k) {
  if (n < 2) throw std::invalid_argument("error_bound_curve: n must be >= 2");
  if (p.c1 < 0.0 || p.c2 < 0.0)
    throw std::invalid_argument("error_bound_curve: constants must be >= 0");
  const double rn = std::sqrt(static_cast<double>(n));
  return p.c1 * std::log(static_cast<double>(n)) / rn + p.c2 * k / rn;
}

ExtrapolationResult extrapolate_vs_inv_sqrt(
    const std::vector<std::pair<int, double>>& points) {
  if (points.size() < 2)
    throw std::invalid_argument(
        "extrapolate_vs_inv_sqrt: need at least two ladder points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double np = static_cast<double>(points.size());
  for (const auto& [n, y] : points) {
    const double x = 1.0 / std::sqrt(static_cast<double>(n));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double det = np * sxx - sx * sx;
  if (det == 0.0)
    throw std::invalid_argument(
        "extrapolate_vs_inv_sqrt: ladder points must have distinct n");
  ExtrapolationResult r;
  r.slope = (np * sxy - sx * sy) / det;
  r.intercept = (sy - r.slope * sx) / np;
  double ss = 0;
  for (const auto& [n, y] : points) {
    const double x = 1.0 / std::sqrt(static_cast<double>(n));
    const double e = y - (r.intercept + r.slope * x);
    ss += e * e;
  }
  r.residual_rms = std::sqrt(ss / np);
  return r;
}

}  // namespace excount
