#include "harary/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace harary {

Graph::Graph(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count must be in 1.." +
                                std::to_string(kMaxVertices) + ", got " +
                                std::to_string(n));
  }
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range 0.." + std::to_string(n_ - 1));
  }
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

std::uint64_t Graph::neighbor_mask(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

std::vector<int> Graph::neighbors(int v) const {
  std::uint64_t row = neighbor_mask(v);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(row)));
  while (row) {
    int u = std::countr_zero(row);
    out.push_back(u);
    row &= row - 1;
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int u = 0; u < n_; ++u) {
    std::uint64_t row = adj_[u] >> (u + 1) << (u + 1);
    while (row) {
      int v = std::countr_zero(row);
      out.emplace_back(u, v);
      row &= row - 1;
    }
  }
  return out;
}

std::uint64_t Graph::vertex_mask() const noexcept {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

Graph from_edge_list(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  int n1 = g1.vertex_count();
  int n2 = g2.vertex_count();
  if (n1 + n2 > kMaxVertices) {
    throw std::invalid_argument("union exceeds " + std::to_string(kMaxVertices) +
                                " vertices");
  }
  Graph g(n1 + n2);
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  int n1 = g1.vertex_count();
  for (int u = 0; u < n1; ++u)
    for (int v = n1; v < g.vertex_count(); ++v) g.add_edge(u, v);
  return g;
}

namespace {

// Mask of all vertices reachable from `start`, by frontier expansion.
std::uint64_t reach_mask(const Graph& g, int start) {
  std::uint64_t visited = std::uint64_t{1} << start;
  std::uint64_t frontier = visited;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t rest = frontier;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      next |= g.neighbor_mask(v);
    }
    frontier = next & ~visited;
    visited |= frontier;
  }
  return visited;
}

}  // namespace

bool is_connected(const Graph& g) {
  return reach_mask(g, 0) == g.vertex_mask();
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {
  if (d_.size() != static_cast<std::size_t>(n_) * n_) {
    throw std::invalid_argument("distance matrix size mismatch");
  }
}

int DistanceMatrix::max_distance() const {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix apsp(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> d(static_cast<std::size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    std::uint64_t visited = std::uint64_t{1} << s;
    std::uint64_t frontier = visited;
    int hops = 0;
    while (frontier) {
      std::uint64_t rest = frontier;
      std::uint64_t next = 0;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        d[static_cast<std::size_t>(s) * n + v] = hops;
        next |= g.neighbor_mask(v);
      }
      frontier = next & ~visited;
      visited |= frontier;
      ++hops;
    }
    if (visited != g.vertex_mask()) {
      throw DisconnectedGraphError("graph is disconnected");
    }
  }
  return DistanceMatrix(n, std::move(d));
}

Graph contract_cut_edge_with_pendant(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) {
    throw std::invalid_argument("no edge (" + std::to_string(u) + ", " +
                                std::to_string(v) + ")");
  }
  if (g.degree(u) < 2 || g.degree(v) < 2) {
    throw std::invalid_argument("contraction endpoints must have degree >= 2");
  }
  // Bridge test: after removing the edge, v must be unreachable from u.
  Graph cut = g;
  cut.remove_edge(u, v);
  if ((reach_mask(cut, u) >> v) & 1u) {
    throw NotABridgeError("edge (" + std::to_string(u) + ", " +
                          std::to_string(v) + ") is not a bridge");
  }
  int merged = std::min(u, v);
  int pendant = std::max(u, v);
  Graph out(g.vertex_count());
  std::uint64_t endpoints = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  for (auto [a, b] : g.edges()) {
    if ((endpoints >> a) & 1u) a = merged;
    if ((endpoints >> b) & 1u) b = merged;
    if (a != b) out.add_edge(a, b);
  }
  out.add_edge(merged, pendant);
  return out;
}

namespace {

// Next content line, with '#' comments and blank lines skipped.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) {
    throw std::invalid_argument("edge list: missing header line");
  }
  std::istringstream header(line);
  int n = 0;
  int m = 0;
  if (!(header >> n >> m) || m < 0) {
    throw std::invalid_argument("edge list: header must be \"n m\"");
  }
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    if (!next_data_line(in, line)) {
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    }
    std::istringstream row(line);
    int u = 0;
    int v = 0;
    if (!(row >> u >> v)) {
      throw std::invalid_argument("edge list: bad edge line \"" + line + "\"");
    }
    g.add_edge(u, v);
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  auto es = g.edges();
  out << g.vertex_count() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

}  // namespace harary
