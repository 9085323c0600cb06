#ifndef HARARY_GRAPH_HPP
#define HARARY_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace harary {

// Vertex cap chosen so one adjacency row fits a machine word.
inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;

struct DisconnectedGraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotABridgeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 0..n-1. Adjacency is kept symmetric
// and irreflexive; rows are 64-bit neighbor masks. Values are cheap to copy
// and meant to be treated as immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept;

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::uint64_t neighbor_mask(int v) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  std::uint64_t vertex_mask() const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Builds a graph from an edge list. Duplicate edges collapse; self-loops and
// out-of-range endpoints are rejected.
Graph from_edge_list(int n, std::span<const Edge> edges);

// Vertex-disjoint union; the second block is relabeled to n1..n1+n2-1.
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Disjoint union plus all n1*n2 cross edges.
Graph join(const Graph& g1, const Graph& g2);

bool is_connected(const Graph& g);

// All-pairs shortest-path hop counts of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> d);

  int size() const noexcept { return n_; }
  int at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  int max_distance() const;

 private:
  int n_ = 0;
  std::vector<int> d_;
};

// Breadth-first hop counts from every source.
// Throws DisconnectedGraphError when some pair is unreachable.
DistanceMatrix apsp(const Graph& g);

// Contracts the bridge (u, v) into one vertex carrying both neighborhoods and
// re-attaches a fresh pendant vertex there, so the vertex count is preserved.
// The merged vertex keeps label min(u, v); the pendant reuses max(u, v).
// Requires both endpoints to have degree >= 2.
Graph contract_cut_edge_with_pendant(const Graph& g, int u, int v);

// Edge-list text format: first line "n m", then m lines "u v" (0-indexed).
// Lines starting with '#' and blank lines are ignored.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace harary

#endif  // HARARY_GRAPH_HPP
