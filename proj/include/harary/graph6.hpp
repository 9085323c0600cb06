#ifndef HARARY_GRAPH6_HPP
#define HARARY_GRAPH6_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "harary/graph.hpp"

namespace harary {

// Short-form graph6 interchange format: header byte n+63, then the upper
// adjacency triangle in column-major order, packed big-endian into 6-bit
// groups offset by 63. Printable range caps n at 62.

std::string encode_graph6(const Graph& g);

Graph decode_graph6(std::string_view text);

// One graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace harary

#endif  // HARARY_GRAPH6_HPP
