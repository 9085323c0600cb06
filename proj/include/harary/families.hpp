#ifndef HARARY_FAMILIES_HPP
#define HARARY_FAMILIES_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "harary/graph.hpp"

namespace harary {

// Parametric graph families. Vertex labeling is deterministic: the join
// block comes first, then the listed parts in order; clique vertices come
// before pendant vertices.
namespace family {

struct Complete {
  int n;
};

// Complement of the complete graph (edgeless).
struct EmptyComplement {
  int n;
};

struct CompleteBipartite {
  int n1, n2;
};

// Star on n vertices, center labeled 0.
struct Star {
  int n;
};

// K_s joined to a disjoint union of cliques of the given sizes.
struct SplitJoin {
  int s;
  std::vector<int> parts;
};

// Clique on t vertices with pendants[i] pendant edges attached to vertex i.
struct PendantClique {
  int t;
  std::vector<int> pendants;
};

// K_s joined to the union of an edgeless block on k-1 vertices and a clique
// on 2t+1 vertices.
struct CollapsedSplit {
  int s, t, k;
};

}  // namespace family

using FamilySpec =
    std::variant<family::Complete, family::EmptyComplement,
                 family::CompleteBipartite, family::Star, family::SplitJoin,
                 family::PendantClique, family::CollapsedSplit>;

Graph generate(const FamilySpec& spec);

// Textual form, e.g. "complete(5)", "bipartite(2,5)", "star(6)",
// "empty(4)", "split_join(2; 4,1)", "pendant_clique(4; 2,1)",
// "collapsed_split(1,1,3)".
FamilySpec parse_family(std::string_view text);
std::string format_family(const FamilySpec& spec);

}  // namespace harary

#endif  // HARARY_FAMILIES_HPP
