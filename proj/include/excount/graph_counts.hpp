#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "excount/numeric.hpp"

namespace excount {

enum class Provenance { brute_force, recurrence, spencer };

const char* provenance_name(Provenance p);

// Connected-graph counts C(n,k) keyed by (n,k): n labeled vertices,
// n+k-1 edges. One value per provenance; all provenances must agree.
class GraphCountTable {
 public:
  using Key = std::pair<int, int>;

  // Throws if a stored value for (n,k) disagrees with `value`.
  void record(int n, int k, Provenance p, const BigInt& value);
  std::optional<BigInt> lookup(int n, int k) const;
  std::optional<BigInt> lookup(int n, int k, Provenance p) const;
  const std::map<Key, std::map<Provenance, BigInt>>& entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<Key, std::map<Provenance, BigInt>> entries_;
};

struct BruteForceOptions {
  int max_n = 7;   // enumeration ceiling
  int threads = 0; // 0 = runtime default
};

// Enumerates every (n+k-1)-edge subset of the n-vertex edge slots and counts
// the connected ones (disjoint-set check). Chunked over the lexicographic
// combination order for parallelism.
BigInt brute_force_count(int n, int k, const BruteForceOptions& opt = {});
// Single-threaded reference walk over the same order.
BigInt brute_force_count_serial(int n, int k, const BruteForceOptions& opt = {});

// Component-of-vertex-1 decomposition:
//   C(n,m) = T(n,m) - sum_{j=1}^{n-1} binom(n-1,j-1) sum_p C(j,p) T(n-j,m-p),
// with T(a,b) = binom(a(a-1)/2, b) counting all graphs. Memoizes into the
// supplied table (provenance "recurrence") and reuses any cached entries.
BigInt recurrence_count(int n, int k, GraphCountTable& cache);

inline constexpr const char* kCacheHeader = "graphcounts v1";

// One record per line: "n k provenance value", sorted by (n, k, provenance);
// byte-stable for identical tables.
void save_cache(const GraphCountTable& t, const std::string& path);
GraphCountTable load_cache(const std::string& path);

}  // namespace excount
