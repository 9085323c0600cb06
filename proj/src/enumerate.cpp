#include "harary/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace harary {

namespace {

constexpr int kCanonicalCap = 11;  // 55 triangle bits fit one word

int triangle_bits(int n) { return n * (n - 1) / 2; }

// Branch-and-bound minimization of the packed upper-triangle bitstring.
// Positions are assigned one vertex at a time; assigning position q fixes
// the q bits of column q, so any prefix that already exceeds the incumbent
// can be cut. Strictly smaller prefixes dominate every later comparison,
// which lets improving branches run straight to a leaf.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g)
      : g_(g), n_(g.vertex_count()), total_bits_(triangle_bits(n_)) {
    if (n_ > kCanonicalCap) {
      throw std::invalid_argument("canonical form capped at " +
                                  std::to_string(kCanonicalCap) + " vertices");
    }
    best_ = pack_identity();
    if (n_ > 1) {
      std::array<int, kCanonicalCap> perm{};
      dfs(0, 0, 0, perm);
    }
  }

  std::uint64_t key() const { return best_; }

 private:
  std::uint64_t pack_identity() const {
    std::uint64_t acc = 0;
    int bit = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        if (g_.has_edge(i, j)) acc |= std::uint64_t{1} << (63 - bit);
      }
    }
    return acc;
  }

  void dfs(int pos, std::uint64_t acc, std::uint64_t used,
           std::array<int, kCanonicalCap>& perm) {
    if (pos == n_) {
      if (acc < best_) best_ = acc;
      return;
    }
    int prefix_bits = triangle_bits(pos + 1);
    std::uint64_t prefix_mask = prefix_bits == 0
                                    ? 0
                                    : ~std::uint64_t{0} << (64 - prefix_bits);

    // Column bits this vertex would contribute at this position, tried in
    // ascending order so the leftmost descent is greedy.
    std::array<std::pair<std::uint64_t, int>, kCanonicalCap> cand;
    int cand_count = 0;
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1u) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < pos; ++i) {
        column = (column << 1) | (g_.has_edge(perm[i], v) ? 1 : 0);
      }
      cand[cand_count++] = {column, v};
    }
    std::sort(cand.begin(), cand.begin() + cand_count);

    int column_shift = 64 - prefix_bits;  // column occupies the low end of prefix
    for (int c = 0; c < cand_count; ++c) {
      auto [column, v] = cand[c];
      std::uint64_t next = acc | (column << column_shift);
      if (next > (best_ & prefix_mask)) continue;
      perm[pos] = v;
      dfs(pos + 1, next, used | (std::uint64_t{1} << v), perm);
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_;
  std::uint64_t best_;
};

Graph graph_from_key(int n, std::uint64_t key) {
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((key >> (63 - bit)) & 1u) g.add_edge(i, j);
    }
  }
  return g;
}

// All isomorphism classes on n vertices (connected or not), as canonical
// keys in ascending order. Level n is grown from level n-1 by attaching a
// new vertex with every possible neighborhood.
const std::vector<std::uint64_t>& all_classes(int n, int jobs);

std::vector<std::uint64_t> build_level(int n, int jobs) {
  if (n == 1) return {0};
  const std::vector<std::uint64_t>& parents = all_classes(n - 1, jobs);
  std::uint64_t subset_count = std::uint64_t{1} << (n - 1);

  auto worker = [&](std::size_t begin, std::size_t end,
                    std::vector<std::uint64_t>& out) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      Graph parent = graph_from_key(n - 1, parents[idx]);
      for (std::uint64_t subset = 0; subset < subset_count; ++subset) {
        Graph candidate(n);
        for (auto [u, v] : parent.edges()) candidate.add_edge(u, v);
        std::uint64_t rest = subset;
        while (rest) {
          int u = std::countr_zero(rest);
          rest &= rest - 1;
          candidate.add_edge(u, n - 1);
        }
        out.push_back(CanonicalSearch(candidate).key());
      }
    }
  };

  std::vector<std::uint64_t> keys;
  int threads = std::max(1, std::min<int>(jobs, static_cast<int>(parents.size())));
  if (threads == 1) {
    worker(0, parents.size(), keys);
  } else {
    std::vector<std::vector<std::uint64_t>> partial(threads);
    std::vector<std::thread> pool;
    std::size_t chunk = (parents.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(parents.size(), begin + chunk);
      pool.emplace_back(worker, begin, end, std::ref(partial[t]));
    }
    for (auto& th : pool) th.join();
    for (auto& part : partial) {
      keys.insert(keys.end(), part.begin(), part.end());
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

const std::vector<std::uint64_t>& all_classes(int n, int jobs) {
  static std::map<int, std::vector<std::uint64_t>> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<std::uint64_t> level = build_level(n, jobs);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(level)).first->second;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  return graph_from_key(g.vertex_count(), CanonicalSearch(g).key());
}

std::uint64_t canonical_key(const Graph& g) { return CanonicalSearch(g).key(); }

std::vector<Graph> enumerate_connected(int n, int jobs) {
  if (n < 2 || n > 8) {
    throw std::invalid_argument("enumeration supported for 2 <= n <= 8");
  }
  std::vector<Graph> out;
  for (std::uint64_t key : all_classes(n, jobs)) {
    Graph g = graph_from_key(n, key);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

namespace {

// Per-vertex refinement signature: degree plus sorted neighbor degrees.
std::vector<std::vector<int>> signatures(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> sig(n);
  for (int v = 0; v < n; ++v) {
    sig[v].push_back(g.degree(v));
    std::vector<int> nd;
    for (int u : g.neighbors(v)) nd.push_back(g.degree(u));
    std::sort(nd.begin(), nd.end());
    sig[v].insert(sig[v].end(), nd.begin(), nd.end());
  }
  return sig;
}

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  const std::vector<std::vector<int>>& sig_a;
  const std::vector<std::vector<int>>& sig_b;
  std::vector<int> map;      // vertex of a -> vertex of b
  std::uint64_t used_b = 0;

  bool extend(int v) {
    int n = a.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if ((used_b >> w) & 1u) continue;
      if (sig_a[v] != sig_b[w]) continue;
      bool ok = true;
      for (int prev = 0; prev < v; ++prev) {
        if (a.has_edge(prev, v) != b.has_edge(map[prev], w)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[v] = w;
      used_b |= std::uint64_t{1} << w;
      if (extend(v + 1)) return true;
      used_b &= ~(std::uint64_t{1} << w);
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) return false;
  int n = g1.vertex_count();
  if (n > 16) {
    throw std::invalid_argument("isomorphism search capped at 16 vertices");
  }
  if (g1.edge_count() != g2.edge_count()) return false;
  auto sig1 = signatures(g1);
  auto sig2 = signatures(g2);
  auto sorted1 = sig1;
  auto sorted2 = sig2;
  std::sort(sorted1.begin(), sorted1.end());
  std::sort(sorted2.begin(), sorted2.end());
  if (sorted1 != sorted2) return false;

  IsoSearch search{g1, g2, sig1, sig2, std::vector<int>(n, -1), 0};
  return search.extend(0);
}

}  // namespace harary
