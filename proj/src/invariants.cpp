#include "harary/invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

namespace harary {

namespace {

// Edmonds' maximum cardinality matching. Follows the classic formulation:
// breadth-first alternating forests, with odd cycles contracted into
// blossoms identified by their base vertex.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.vertex_count()),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        in_queue_(n_, false),
        in_blossom_(n_, false) {}

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int leaf = find_augmenting_path(v);
      if (leaf != -1) augment(leaf);
    }
    return match_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<bool> seen(n_, false);
    int cur = a;
    while (true) {
      cur = base_[cur];
      seen[cur] = true;
      if (match_[cur] == -1) break;
      cur = parent_[match_[cur]];
    }
    cur = b;
    while (true) {
      cur = base_[cur];
      if (seen[cur]) return cur;
      cur = parent_[match_[cur]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(in_queue_.begin(), in_queue_.end(), false);
    std::iota(base_.begin(), base_.end(), 0);

    std::queue<int> queue;
    queue.push(root);
    in_queue_[root] = true;

    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          // Two even vertices meet: contract the blossom around their
          // common base.
          int cur_base = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!in_queue_[i]) {
                in_queue_[i] = true;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;  // augmenting path found
          in_queue_[match_[to]] = true;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  void augment(int leaf) {
    int v = leaf;
    while (v != -1) {
      int pv = parent_[v];
      int next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> in_queue_;
  std::vector<bool> in_blossom_;
};

int odd_components_masked(const Graph& g, std::uint64_t removed) {
  std::uint64_t remaining = g.vertex_mask() & ~removed;
  int odd = 0;
  while (remaining) {
    int start = std::countr_zero(remaining);
    std::uint64_t comp = std::uint64_t{1} << start;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t rest = frontier;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        next |= g.neighbor_mask(v);
      }
      frontier = next & remaining & ~comp;
      comp |= frontier;
    }
    if (std::popcount(comp) % 2 == 1) ++odd;
    remaining &= ~comp;
  }
  return odd;
}

std::uint64_t subset_to_mask(const Graph& g, std::span<const int> subset) {
  std::uint64_t mask = 0;
  for (int v : subset) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("subset vertex " + std::to_string(v) +
                                  " out of range");
    }
    mask |= std::uint64_t{1} << v;
  }
  return mask;
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

MatchingCertificate matching_number(const Graph& g) {
  std::vector<int> match = Blossom(g).run();
  MatchingCertificate cert;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (match[v] > v) cert.edges.emplace_back(v, match[v]);
  }
  cert.size = static_cast<int>(cert.edges.size());
  return cert;
}

int odd_components(const Graph& g, std::span<const int> removed) {
  return odd_components_masked(g, subset_to_mask(g, removed));
}

DeficiencyWitness tutte_berge_deficiency(const Graph& g) {
  int n = g.vertex_count();
  if (n > 20) {
    throw std::invalid_argument("deficiency search capped at 20 vertices");
  }
  DeficiencyWitness best;
  best.value = odd_components_masked(g, 0);  // X = empty
  std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    int value = odd_components_masked(g, mask) - std::popcount(mask);
    if (value > best.value) {
      best.value = value;
      best.witness_set = mask_to_vertices(mask);
    }
  }
  return best;
}

int covering_number(const Graph& g) {
  int n = g.vertex_count();
  if (n > 20) {
    throw std::invalid_argument("cover search capped at 20 vertices");
  }
  auto es = g.edges();
  if (es.empty()) return 0;
  for (int k = 1; k <= n; ++k) {
    // k-subsets in Gosper order.
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
      bool covers = true;
      for (auto [u, v] : es) {
        if (!((mask >> u) & 1u) && !((mask >> v) & 1u)) {
          covers = false;
          break;
        }
      }
      if (covers) return k;
      std::uint64_t c = mask & -mask;
      std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return n;  // unreachable: V always covers
}

namespace {

struct BridgeFinder {
  const Graph& g;
  std::vector<int> entry, low;
  std::vector<Edge> bridges;
  int timer = 0;

  explicit BridgeFinder(const Graph& graph)
      : g(graph), entry(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {}

  void dfs(int v, int parent_edge_from) {
    entry[v] = low[v] = timer++;
    for (int to : g.neighbors(v)) {
      if (to == parent_edge_from) continue;
      if (entry[to] != -1) {
        low[v] = std::min(low[v], entry[to]);
      } else {
        dfs(to, v);
        low[v] = std::min(low[v], low[to]);
        if (low[to] > entry[v]) {
          bridges.emplace_back(std::min(v, to), std::max(v, to));
        }
      }
    }
  }
};

}  // namespace

std::vector<Edge> cut_edges(const Graph& g) {
  if (!is_connected(g)) {
    throw DisconnectedGraphError("cut_edges requires a connected graph");
  }
  BridgeFinder finder(g);
  finder.dfs(0, -1);
  std::sort(finder.bridges.begin(), finder.bridges.end());
  return finder.bridges;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  if (!is_connected(g)) {
    throw DisconnectedGraphError("is_bipartite requires a connected graph");
  }
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::queue<int> queue;
  color[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int to : g.neighbors(v)) {
      if (color[to] == -1) {
        color[to] = 1 - color[v];
        queue.push(to);
      } else if (color[to] == color[v]) {
        return std::nullopt;
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < n; ++v) {
    (color[v] == 0 ? parts.left : parts.right).push_back(v);
  }
  return parts;
}

}  // namespace harary
