#ifndef HARARY_INVARIANTS_HPP
#define HARARY_INVARIANTS_HPP

#include <optional>
#include <span>
#include <vector>

#include "harary/graph.hpp"

namespace harary {

struct MatchingCertificate {
  int size = 0;
  std::vector<Edge> edges;  // pairwise vertex-disjoint, present in the graph
};

// Maximum matching via Edmonds' blossom algorithm (augmenting paths with
// blossom contraction). Works on disconnected graphs too.
MatchingCertificate matching_number(const Graph& g);

// Number of odd-order connected components of g - X.
int odd_components(const Graph& g, std::span<const int> removed);

struct DeficiencyWitness {
  int value = 0;                  // max over X of odd(G-X) - |X|
  std::vector<int> witness_set;   // a maximizing X, first in mask order
};

// Exhaustive maximization of odd(G-X) - |X| over all vertex subsets.
// Capped at n <= 20.
DeficiencyWitness tutte_berge_deficiency(const Graph& g);

// Minimum vertex cover size, by subset search in increasing size with early
// exit. Capped at n <= 20.
int covering_number(const Graph& g);

// Bridges of a connected graph via depth-first low-link, normalized (u < v,
// lexicographic).
std::vector<Edge> cut_edges(const Graph& g);

struct Bipartition {
  std::vector<int> left;   // side containing vertex 0
  std::vector<int> right;
};

// Two-coloring of a connected graph, or nullopt if an odd cycle exists.
std::optional<Bipartition> is_bipartite(const Graph& g);

}  // namespace harary

#endif  // HARARY_INVARIANTS_HPP
