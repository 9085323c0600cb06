#include "harary/graph6.hpp"

#include <istream>

namespace harary {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxPrintable = 62;  // header 63+n must stay below '~' (126)

int triangle_bits(int n) { return n * (n - 1) / 2; }

}  // namespace

std::string encode_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1 || n > kMaxPrintable) {
    throw std::invalid_argument("graph6 short form requires 1 <= n <= 62");
  }
  std::string out;
  out.push_back(static_cast<char>(kOffset + n));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kOffset + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= 6 - filled;  // zero padding
    out.push_back(static_cast<char>(kOffset + group));
  }
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  unsigned char header = static_cast<unsigned char>(text[0]);
  if (header == 126) {
    throw std::invalid_argument("graph6: long form (n > 62) not supported");
  }
  if (header < kOffset || header > kOffset + kMaxPrintable) {
    throw std::invalid_argument("graph6: malformed header byte");
  }
  int n = header - kOffset;
  if (n < 1) throw std::invalid_argument("graph6: empty graph not representable");
  int bits = triangle_bits(n);
  std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != 1 + payload) {
    throw std::invalid_argument(text.size() < 1 + payload
                                    ? "graph6: payload too short"
                                    : "graph6: trailing garbage after payload");
  }
  Graph g(n);
  int bit_index = 0;
  for (std::size_t k = 0; k < payload; ++k) {
    unsigned char byte = static_cast<unsigned char>(text[1 + k]);
    if (byte < kOffset || byte > kOffset + 63) {
      throw std::invalid_argument("graph6: payload byte out of range");
    }
    int group = byte - kOffset;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      int bit = (group >> b) & 1;
      if (bit_index >= bits) {
        if (bit) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (bit) {
        // bit_index enumerates pairs (i, j), i < j, column-major
        int j = 1;
        int rem = bit_index;
        while (rem >= j) {
          rem -= j;
          ++j;
        }
        g.add_edge(rem, j);
      }
    }
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

}  // namespace harary
