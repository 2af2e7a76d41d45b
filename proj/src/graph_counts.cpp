#include "excount/graph_counts.hpp"

#include <omp.h>

#include <array>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace excount {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::brute_force: return "brute_force";
    case Provenance::recurrence: return "recurrence";
    case Provenance::spencer: return "spencer";
  }
  return "?";
}

namespace {

std::optional<Provenance> parse_provenance(const std::string& s) {
  if (s == "brute_force") return Provenance::brute_force;
  if (s == "recurrence") return Provenance::recurrence;
  if (s == "spencer") return Provenance::spencer;
  return std::nullopt;
}

long long max_feasible_k(int n) {
  if (n <= 1) return 0;
  return static_cast<long long>(n) * (n - 1) / 2 - n + 1;
}

}  // namespace

void GraphCountTable::record(int n, int k, Provenance p, const BigInt& value) {
  auto& per = entries_[{n, k}];
  for (const auto& [q, v] : per) {
    if (v != value) {
      std::ostringstream os;
      os << "graph count disagreement at (n=" << n << ", k=" << k
         << "): " << provenance_name(q) << "=" << v.str() << " vs "
         << provenance_name(p) << "=" << value.str();
      throw std::runtime_error(os.str());
    }
  }
  per[p] = value;
}

std::optional<BigInt> GraphCountTable::lookup(int n, int k) const {
  auto it = entries_.find({n, k});
  if (it == entries_.end() || it->second.empty()) return std::nullopt;
  return it->second.begin()->second;
}

std::optional<BigInt> GraphCountTable::lookup(int n, int k,
                                              Provenance p) const {
  auto it = entries_.find({n, k});
  if (it == entries_.end()) return std::nullopt;
  auto jt = it->second.find(p);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

namespace {

// Pascal triangle in 64-bit, large enough for edge-slot counts of the
// brute-force range (binom(55,27) still fits).
class SmallBinom {
 public:
  explicit SmallBinom(int n_max) : n_(n_max + 1), c_(n_ * n_, 0) {
    for (int n = 0; n <= n_max; ++n) {
      at(n, 0) = 1;
      for (int k = 1; k <= n; ++k)
        at(n, k) = at(n - 1, k - 1) + (k <= n - 1 ? at(n - 1, k) : 0);
    }
  }
  unsigned long long operator()(int n, int k) const {
    if (k < 0 || k > n) return 0;
    return c_[static_cast<std::size_t>(n) * n_ + k];
  }

 private:
  unsigned long long& at(int n, int k) {
    return c_[static_cast<std::size_t>(n) * n_ + k];
  }
  int n_;
  std::vector<unsigned long long> c_;
};

// Lexicographically r-th m-combination of {0..e-1}.
std::vector<int> unrank_combination(unsigned long long r, int e, int m,
                                    const SmallBinom& bi) {
  std::vector<int> idx(m);
  int v = 0;
  for (int s = 0; s < m; ++s) {
    for (;; ++v) {
      const unsigned long long below = bi(e - v - 1, m - s - 1);
      if (r < below) break;
      r -= below;
    }
    idx[s] = v++;
  }
  return idx;
}

bool next_combination(std::vector<int>& idx, int e) {
  const int m = static_cast<int>(idx.size());
  int i = m - 1;
  while (i >= 0 && idx[i] == e - m + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

struct Dsu {
  std::array<int, 16> parent;
  void reset(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Count connected graphs among combinations [lo, hi) in lexicographic order.
unsigned long long count_range(int n, int m,
                               const std::vector<std::pair<int, int>>& edges,
                               unsigned long long lo, unsigned long long hi,
                               const SmallBinom& bi) {
  const int e = static_cast<int>(edges.size());
  std::vector<int> idx = unrank_combination(lo, e, m, bi);
  unsigned long long hits = 0;
  Dsu dsu;
  for (unsigned long long r = lo; r < hi; ++r) {
    dsu.reset(n);
    int merges = 0;
    for (int s : idx)
      if (dsu.unite(edges[s].first, edges[s].second)) ++merges;
    if (merges == n - 1) ++hits;
    if (r + 1 < hi) next_combination(idx, e);
  }
  return hits;
}

BigInt brute_force_impl(int n, int k, const BruteForceOptions& opt,
                        bool parallel) {
  if (n < 2) throw std::invalid_argument("brute_force_count: n must be >= 2");
  if (n > opt.max_n)
    throw std::invalid_argument(
        "brute_force_count: n exceeds the enumeration ceiling (" +
        std::to_string(opt.max_n) + "); use recurrence_count");
  if (n > 12)  // rank arithmetic above this overflows 64 bits
    throw std::invalid_argument(
        "brute_force_count: enumeration beyond n=12 is not supported");
  const long long m = static_cast<long long>(n) + k - 1;
  const int e = n * (n - 1) / 2;
  if (k < 0 || m > e) return 0;

  std::vector<std::pair<int, int>> edges;
  edges.reserve(e);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);

  SmallBinom bi(e);
  const unsigned long long total = bi(e, static_cast<int>(m));
  if (total == 0) return 0;

  const int chunks =
      parallel ? (opt.threads > 0 ? opt.threads : omp_get_max_threads()) : 1;
  std::vector<unsigned long long> partial(chunks, 0);

#pragma omp parallel for schedule(static, 1) num_threads(chunks) if (parallel)
  for (int c = 0; c < chunks; ++c) {
    const auto lo = static_cast<unsigned long long>(
        static_cast<unsigned __int128>(total) * c / chunks);
    const auto hi = static_cast<unsigned long long>(
        static_cast<unsigned __int128>(total) * (c + 1) / chunks);
    if (lo < hi)
      partial[c] = count_range(n, static_cast<int>(m), edges, lo, hi, bi);
  }

  unsigned long long hits = 0;
  for (int c = 0; c < chunks; ++c) hits += partial[c];  // fixed chunk order
  return BigInt(hits);
}

}  // namespace

BigInt brute_force_count(int n, int k, const BruteForceOptions& opt) {
  return brute_force_impl(n, k, opt, true);
}

BigInt brute_force_count_serial(int n, int k, const BruteForceOptions& opt) {
  return brute_force_impl(n, k, opt, false);
}

BigInt recurrence_count(int n, int k, GraphCountTable& cache) {
  if (n < 1) throw std::invalid_argument("recurrence_count: n must be >= 1");
  const long long m = static_cast<long long>(n) + k - 1;
  if (k < 0 || k > max_feasible_k(n) || m < 0) return 0;
  if (auto hit = cache.lookup(n, k)) return *hit;

  const int m_cap = static_cast<int>(m);
  // T(a,b) = binom(a(a-1)/2, b), memoized locally
  std::vector<std::vector<BigInt>> t_memo(n + 1);
  auto all_graphs = [&](int a, int b) -> const BigInt& {
    auto& row = t_memo[a];
    if (row.empty()) {
      row.resize(m_cap + 1);
      const long long slots = static_cast<long long>(a) * (a - 1) / 2;
      for (int bb = 0; bb <= m_cap; ++bb)
        row[bb] = binomial(static_cast<std::uint64_t>(slots),
                           static_cast<std::uint64_t>(bb));
    }
    return row[b];
  };

  // c[j][p] = C(j, p edges), filled bottom-up for p <= m
  std::vector<std::vector<BigInt>> c(n + 1);
  for (int j = 1; j <= n; ++j) {
    const long long slots = static_cast<long long>(j) * (j - 1) / 2;
    const int p_hi = static_cast<int>(std::min<long long>(m, slots));
    c[j].assign(p_hi + 1, BigInt(0));
    for (int p = (j == 1 ? 0 : j - 1); p <= p_hi; ++p) {
      const int kk = p - j + 1;
      if (auto hit = cache.lookup(j, kk)) {
        c[j][p] = *hit;
        continue;
      }
      BigInt val = all_graphs(j, p);
      for (int jj = 1; jj < j; ++jj) {
        const BigInt pick = binomial(j - 1, jj - 1);
        const long long sub_slots =
            static_cast<long long>(jj) * (jj - 1) / 2;
        BigInt inner = 0;
        const int q_hi =
            static_cast<int>(std::min<long long>(p, sub_slots));
        for (int q = (jj == 1 ? 0 : jj - 1); q <= q_hi; ++q) {
          if (c[jj][q] == 0) continue;
          const BigInt& rest = all_graphs(j - jj, p - q);
          if (rest != 0) inner += c[jj][q] * rest;
        }
        val -= pick * inner;
      }
      c[j][p] = val;
      cache.record(j, kk, Provenance::recurrence, val);
    }
  }
  return c[n][m_cap];
}

void save_cache(const GraphCountTable& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write cache file: " + path);
  out << kCacheHeader << "\n";
  for (const auto& [key, per] : t.entries())
    for (const auto& [p, v] : per)
      out << key.first << " " << key.second << " " << provenance_name(p)
          << " " << v.str() << "\n";
  if (!out) throw std::runtime_error("write failed for cache file: " + path);
}

GraphCountTable load_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read cache file: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("malformed cache file (empty): " + path);
  if (line != kCacheHeader) {
    if (line.rfind("graphcounts ", 0) == 0)
      throw std::runtime_error("unsupported cache version: '" + line +
                               "' (expected '" + kCacheHeader + "')");
    throw std::runtime_error("malformed cache header: '" + line + "'");
  }
  GraphCountTable t;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream is(line);
    long long n, k;
    std::string prov, value, extra;
    if (!(is >> n >> k >> prov >> value) || (is >> extra))
      throw std::runtime_error("malformed cache record at line " +
                               std::to_string(line_no) + ": '" + line + "'");
    const auto p = parse_provenance(prov);
    if (!p)
      throw std::runtime_error("unknown provenance at line " +
                               std::to_string(line_no) + ": '" + prov + "'");
    for (std::size_t i = 0; i < value.size(); ++i)
      if (!(std::isdigit(static_cast<unsigned char>(value[i])) ||
            (i == 0 && value[i] == '-' && value.size() > 1)))
        throw std::runtime_error("bad integer at line " +
                                 std::to_string(line_no) + ": '" + value +
                                 "'");
    const BigInt v(value);
    t.record(static_cast<int>(n), static_cast<int>(k), *p, v);
  }
  return t;
}

}  // namespace excount
