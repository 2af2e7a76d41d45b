#pragma once

#include <cstdint>
#include <random>

namespace excount {

// Default seed for all stochastic entry points; fixed (not time-based) so
// default runs are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 2718281828459045235ULL;

// Inverse standard normal CDF (Wichura's PPND16 rational approximation),
// accurate to ~1e-15 over (0,1).
double normal_icdf(double p);

// Deterministic random stream. The (seed, stream) pair fully determines the
// output sequence on every platform: mt19937_64 is specified bit-for-bit by
// the standard, and the seed mixing below is fixed arithmetic.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64() { return gen_(); }
  // Uniform on [0, 1), 53-bit resolution.
  double uniform01();
  // Standard normal via inverse CDF on a (0,1) uniform; no rejection, no
  // cached spare value, so the draw count is predictable.
  double normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 gen_;
};

}  // namespace excount
