#include <doctest.h>

#include <sstream>

#include "harary/enumerate.hpp"
#include "harary/graph6.hpp"
#include "test_helpers.hpp"

using harary::Graph;
using namespace test_helpers;

// Format oracle, worked out by hand from the published byte layout:
//   K_4: header 63+4='C'; triangle bits 111111 -> 63 -> byte 126 '~'
//   K_3: header 63+3='B'; bits 111 padded to 111000 -> 56 -> byte 119 'w'
//   K_2: header 63+2='A'; bit 1 padded to 100000 -> 32 -> byte 95 '_'
TEST_CASE("graph6 encoding matches hand-decoded bytes") {
  CHECK(harary::encode_graph6(complete(4)) == "C~");
  CHECK(harary::encode_graph6(complete(3)) == "Bw");
  CHECK(harary::encode_graph6(complete(2)) == "A_");
}

TEST_CASE("graph6 decoding matches hand-decoded bytes") {
  CHECK(harary::decode_graph6("C~") == complete(4));
  CHECK(harary::decode_graph6("Bw") == complete(3));
  CHECK(harary::decode_graph6("A_") == complete(2));
  CHECK(harary::decode_graph6("@") == Graph(1));
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(harary::decode_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(harary::decode_graph6("C~~"), std::invalid_argument);  // trailing
  CHECK_THROWS_AS(harary::decode_graph6("C"), std::invalid_argument);    // short
  CHECK_THROWS_AS(harary::decode_graph6("~??"), std::invalid_argument);  // long form
  CHECK_THROWS_AS(harary::decode_graph6("\x20zz"), std::invalid_argument);
  CHECK_THROWS_AS(harary::decode_graph6("?"), std::invalid_argument);  // n = 0
  // nonzero padding: K_3 payload with a stray low bit set
  std::string bad = "B";
  bad.push_back(static_cast<char>(119 + 1));
  CHECK_THROWS_AS(harary::decode_graph6(bad), std::invalid_argument);
}

TEST_CASE("round trip over every connected class up to 7 vertices") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : harary::enumerate_connected(n)) {
      std::string s = harary::encode_graph6(g);
      CHECK(harary::decode_graph6(s) == g);
      CHECK(harary::encode_graph6(harary::decode_graph6(s)) == s);
    }
  }
}

TEST_CASE("round trip across byte-group boundaries") {
  // n = 13 gives 78 triangle bits: a full multi-byte payload.
  Graph g = petersen();
  Graph big = harary::disjoint_union(g, complete(3));
  big.add_edge(0, 10);
  std::string s = harary::encode_graph6(big);
  CHECK(harary::decode_graph6(s) == big);
}

TEST_CASE("graph6 stream reading") {
  std::istringstream in("C~\n\nBw\r\nA_\n");
  auto graphs = harary::read_graph6_stream(in);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0] == complete(4));
  CHECK(graphs[1] == complete(3));
  CHECK(graphs[2] == complete(2));
}
