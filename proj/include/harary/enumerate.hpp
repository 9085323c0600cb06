#ifndef HARARY_ENUMERATE_HPP
#define HARARY_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "harary/graph.hpp"

namespace harary {

// Canonical form: the relabeling whose upper-triangle bitstring (column-major,
// the graph6 bit order) is lexicographically minimal over all vertex
// permutations. Two graphs are isomorphic iff their canonical forms are
// labeled-equal. Capped at 11 vertices (55 triangle bits).
Graph canonical_form(const Graph& g);

// The minimal bitstring itself, left-aligned in a 64-bit word.
std::uint64_t canonical_key(const Graph& g);

// Exactly one representative per isomorphism class of connected graphs on n
// vertices, in canonical-key order. Built by vertex augmentation from the
// (n-1)-vertex classes; levels are cached. 2 <= n <= 8.
std::vector<Graph> enumerate_connected(int n, int jobs = 1);

// Adjacency-preserving bijection search with degree and neighbor-degree
// pruning. Capped at 16 vertices.
bool isomorphic(const Graph& g1, const Graph& g2);

}  // namespace harary

#endif  // HARARY_ENUMERATE_HPP
