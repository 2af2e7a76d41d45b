#include "excount/exact_moments.hpp"

#include <omp.h>

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

namespace excount {

namespace {

// Exact engine. Works on factorial-rescaled state values so every number is
// a plain big integer:
//
//   N_i(q) = (q+i-1)! * sum over admissible z_1..z_i ending at Q_i = q of
//            prod 1/z_t!,
//
// which turns the 1/z! transition into the integer coefficient
//
//   N_{i+1}(q') = sum_z binom(q'+i, z) * N_i(q'+1-z),  0 <= z <= q'.
//
// Moment layers S^{(j)} carry the same scaling times (area so far)^j; the
// area shift q'-1 is applied on entering (i+1, q') via the binomial
// expansion of (area + q'-1)^j. The final step (q'=0, forced z=0) adds no
// shift because M stops at Q_{n-1}.
struct ExactDp {
  int n, k;
  // finals[j] = (n-1)! * sum over excursions of weight * M^j
  std::vector<BigInt> finals;

  void run(int threads) {
    const int kk = k;
    // prev[j][q-1] for q in 1..width of the previous row
    std::vector<std::vector<BigInt>> prev(kk + 1), next(kk + 1);
    for (auto& layer : prev) layer.assign(1, BigInt(0));
    prev[0][0] = 1;  // row i=0: only q=1, area 0
    int prev_width = 1;

    for (int step = 1; step <= n - 1; ++step) {
      const int width = n - step;  // targets q' = 1..width
      for (auto& layer : next) layer.assign(width, BigInt(0));

#pragma omp parallel for schedule(dynamic) num_threads( \
    threads > 0 ? threads : omp_get_max_threads())
      for (int qp = 1; qp <= width; ++qp) {
        std::vector<BigInt> t(kk + 1, BigInt(0));
        const long long r = qp + step - 1;
        BigInt coeff = 1;  // binom(r, z), updated multiplicatively
        for (int z = 0; z <= qp; ++z) {
          if (z > 0) {
            coeff *= BigInt(r - z + 1);
            coeff /= z;
          }
          const int src = qp + 1 - z;  // source queue value
          if (src > prev_width) continue;
          if (prev[0][src - 1] == 0) continue;  // unreachable state
          for (int j = 0; j <= kk; ++j) {
            const BigInt& v = prev[j][src - 1];
            if (v != 0) t[j] += coeff * v;
          }
        }
        const long long a = qp - 1;  // area contribution of this state
        if (a == 0) {
          for (int j = 0; j <= kk; ++j) next[j][qp - 1] = std::move(t[j]);
        } else {
          // (area + a)^j expanded with small binomials and powers of a
          for (int j = kk; j >= 0; --j) {
            BigInt acc = 0;
            BigInt apow = 1;
            long long c = 1;  // binom(j, j-l), built downward
            for (int l = j; l >= 0; --l) {
              if (t[l] != 0) acc += BigInt(c) * apow * t[l];
              apow *= a;
              c = c * l / (j - l + 1);
            }
            next[j][qp - 1] = std::move(acc);
          }
        }
      }
      std::swap(prev, next);
      prev_width = width;
    }
    // final step to q' = 0 forces z = 0 from q = 1, coefficient 1, no shift
    finals.resize(kk + 1);
    for (int j = 0; j <= kk; ++j) finals[j] = prev[j][0];
  }
};

struct FloatDp {
  int n, k;
  std::vector<double> finals;  // scaled by exp(log_scale)
  double log_scale = 0.0;

  void run(int threads) {
    const int kk = k;
    std::vector<double> inv_fact(n + 1);
    inv_fact[0] = 1.0;
    for (int z = 1; z <= n; ++z) inv_fact[z] = inv_fact[z - 1] / z;

    std::vector<std::vector<double>> prev(kk + 1), next(kk + 1);
    for (auto& layer : prev) layer.assign(1, 0.0);
    prev[0][0] = 1.0;
    int prev_width = 1;

    for (int step = 1; step <= n - 1; ++step) {
      const int width = n - step;
      for (auto& layer : next) layer.assign(width, 0.0);

#pragma omp parallel for schedule(static) num_threads( \
    threads > 0 ? threads : omp_get_max_threads())
      for (int qp = 1; qp <= width; ++qp) {
        std::vector<double> t(kk + 1, 0.0);
        for (int z = 0; z <= qp; ++z) {
          const int src = qp + 1 - z;
          if (src > prev_width) continue;
          const double w = inv_fact[z];
          for (int j = 0; j <= kk; ++j) t[j] += w * prev[j][src - 1];
        }
        const double a = qp - 1;
        if (a == 0.0) {
          for (int j = 0; j <= kk; ++j) next[j][qp - 1] = t[j];
        } else {
          for (int j = kk; j >= 0; --j) {
            double acc = 0.0, apow = 1.0;
            double c = 1.0;
            for (int l = j; l >= 0; --l) {
              acc += c * apow * t[l];
              apow *= a;
              c = c * l / (j - l + 1);
            }
            next[j][qp - 1] = acc;
          }
        }
      }
      // renormalize by the weight-layer max; same factor on every layer
      double mx = 0.0;
      for (int q = 0; q < width; ++q) mx = std::max(mx, next[0][q]);
      if (mx > 0.0) {
        const double inv = 1.0 / mx;
        for (auto& layer : next)
          for (double& v : layer) v *= inv;
        log_scale += std::log(mx);
      }
      std::swap(prev, next);
      prev_width = width;
    }
    finals.resize(kk + 1);
    for (int j = 0; j <= kk; ++j) finals[j] = prev[j][0];
  }
};

}  // namespace

double MomentTable::raw_value(int j) const { return raw_f.at(j); }
double MomentTable::binomial_value(int j) const { return binomial_f.at(j); }

StirlingTriangle StirlingTriangle::build(int k_max) {
  StirlingTriangle t;
  t.k_max = k_max;
  t.s.assign(k_max + 1, {});
  for (int k = 0; k <= k_max; ++k) {
    t.s[k].assign(k + 1, BigInt(0));
    if (k == 0) {
      t.s[0][0] = 1;
      continue;
    }
    // s(k, j) = s(k-1, j-1) - (k-1) s(k-1, j)
    for (int j = 1; j <= k; ++j) {
      t.s[k][j] = t.s[k - 1][j - 1];
      if (j < k) t.s[k][j] -= BigInt(k - 1) * t.s[k - 1][j];
    }
  }
  return t;
}

MomentTable dp_moments(int n, int k, const DpOptions& opt) {
  if (n < 2) throw std::invalid_argument("dp_moments: n must be >= 2");
  if (k < 0) throw std::invalid_argument("dp_moments: k must be >= 0");
  MomentTable t;
  t.n = n;
  t.k_max = k;
  if (opt.arithmetic == Arithmetic::exact) {
    if (n > opt.exact_ceiling)
      throw std::invalid_argument(
          "dp_moments: exact mode is limited to n <= " +
          std::to_string(opt.exact_ceiling) +
          "; use float mode (or raise the ceiling)");
    ExactDp dp{n, k, {}};
    dp.run(opt.threads);
    t.exact = true;
    t.total_weight = BigRat(dp.finals[0], factorial(n - 1));
    t.log_total_weight =
        log_big(dp.finals[0]) - log_big(factorial(n - 1));
    t.raw.resize(k + 1);
    t.raw_f.resize(k + 1);
    for (int j = 0; j <= k; ++j) {
      t.raw[j] = BigRat(dp.finals[j], dp.finals[0]);
      t.raw_f[j] = to_double(t.raw[j]);
    }
  } else {
    FloatDp dp{n, k, {}, 0.0};
    dp.run(opt.threads);
    t.exact = false;
    t.log_total_weight = std::log(dp.finals[0]) + dp.log_scale;
    t.raw_f.resize(k + 1);
    for (int j = 0; j <= k; ++j) t.raw_f[j] = dp.finals[j] / dp.finals[0];
  }
  return t;
}

void binomial_moments(MomentTable& t) {
  const auto st = StirlingTriangle::build(t.k_max);
  t.binomial_f.assign(t.k_max + 1, 0.0);
  if (t.exact) {
    t.binomial.assign(t.k_max + 1, BigRat(0));
    for (int j = 0; j <= t.k_max; ++j) {
      BigRat acc = 0;
      for (int i = 0; i <= j; ++i) acc += BigRat(st(j, i)) * t.raw[i];
      t.binomial[j] = acc / BigRat(factorial(j));
      t.binomial_f[j] = to_double(t.binomial[j]);
    }
  } else {
    for (int j = 0; j <= t.k_max; ++j) {
      double acc = 0.0;
      for (int i = 0; i <= j; ++i) acc += to_double(st(j, i)) * t.raw_f[i];
      t.binomial_f[j] = acc / to_double(factorial(j));
    }
  }
}

std::vector<BigInt> spencer_count_row(int n, int k_max, const DpOptions& opt) {
  if (n < 2) throw std::invalid_argument("spencer_count: n must be >= 2");
  if (opt.arithmetic != Arithmetic::exact)
    throw std::invalid_argument("spencer_count: exact arithmetic only");
  const long long feasible =
      static_cast<long long>(n - 1) * (n - 2) / 2;  // max attainable M
  MomentTable t =
      dp_moments(n, static_cast<int>(std::min<long long>(k_max, feasible)),
                 opt);
  binomial_moments(t);
  const BigInt scale = boost::multiprecision::pow(BigInt(n), n - 2);
  std::vector<BigInt> out(k_max + 1, BigInt(0));
  for (int k = 0; k <= k_max; ++k) {
    if (k > feasible) continue;  // binom(M,k) vanishes identically
    const BigRat v = BigRat(scale) * t.binomial[k];
    if (boost::multiprecision::denominator(v) != 1)
      throw std::logic_error(
          "spencer_count: non-integer result; DP invariant violated");
    out[k] = boost::multiprecision::numerator(v);
  }
  return out;
}

BigInt spencer_count(int n, int k, const DpOptions& opt) {
  if (n < 2) throw std::invalid_argument("spencer_count: n must be >= 2");
  const long long feasible = static_cast<long long>(n - 1) * (n - 2) / 2;
  if (k < 0 || k > feasible) {
    std::cerr << "warning: spencer_count(" << n << ", " << k
              << "): k outside the feasible edge range, returning 0\n";
    return BigInt(0);
  }
  return spencer_count_row(n, k, opt)[k];
}

BigRat excursion_weight(int n) {
  if (n < 2) throw std::invalid_argument("excursion_weight: n must be >= 2");
  ExactDp dp{n, 0, {}};
  dp.run(0);
  return BigRat(dp.finals[0], factorial(n - 1));
}

}  // namespace excount
