#include "excount/numeric.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace excount {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= BigInt(n - i);
    r /= BigInt(i + 1);  // exact: r holds C(n, i+1) after this step
  }
  return r;
}

double log_big(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log_big: value must be positive");
  const std::size_t bits = boost::multiprecision::msb(v);
  if (bits < 900) return std::log(v.convert_to<double>());
  // Keep ~200 significant bits, add back the shift in log space.
  const std::size_t shift = bits - 200;
  const BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

double to_double(const BigRat& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  // Direct conversion handles most cases; fall back to log space when
  // numerator or denominator alone would overflow double.
  const double d = v.convert_to<double>();
  if (std::isfinite(d) && d != 0.0) return d;
  if (num == 0) return 0.0;
  const bool neg = num < 0;
  const double lg = log_big(neg ? BigInt(-num) : num) - log_big(den);
  const double mag = std::exp(lg);
  return neg ? -mag : mag;
}

std::string rat_string(const BigRat& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string double_string(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace excount
