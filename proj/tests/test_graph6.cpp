#include <doctest.h>

#include "oracles.hpp"
#include "qmain/graph6.hpp"

using namespace qmain;

TEST_CASE("triangle encodes with header B") {
  const std::string s = graph6_encode(cycle_graph(3));
  CHECK(s == "Bw");
  CHECK(s[0] == 3 + 63);
}

TEST_CASE("known strings") {
  CHECK(graph6_encode(complete_graph(4)) == "C~");
  CHECK(graph6_encode(star_graph(3)) == "Cs");
  CHECK(graph6_encode(Graph(1)) == "@");
  CHECK(graph6_encode(Graph(0)) == "?");
  const Graph g = graph6_decode("D?{");
  CHECK(g.order() == 5);
  CHECK(graph6_encode(g) == "D?{");
}

TEST_CASE("round trip") {
  for (int n : {2, 5, 9, 12, 40, 62, 63, 64, 100}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Graph g = oracle::random_graph(n, 0.3, seed * 31 + n);
      CHECK(graph6_decode(graph6_encode(g)) == g);
    }
  }
}

TEST_CASE("extended length header") {
  const std::string s = graph6_encode(path_graph(63));
  CHECK(s.substr(0, 4) == std::string{126, 63, 63 + 0, 63 + 63});
  CHECK(graph6_decode(s) == path_graph(63));
}

TEST_CASE("prefix and trailing newline are accepted") {
  CHECK(graph6_decode(">>graph6<<Bw\n") == cycle_graph(3));
}

TEST_CASE("malformed input reports byte offsets") {
  auto offset_of = [](std::string_view text) -> long {
    try {
      graph6_decode(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("B") == 1);           // missing data byte
  CHECK(offset_of("Bww") == 2);         // one byte too many
  CHECK(offset_of("Bx") == 1);          // padding bit set
  CHECK(offset_of("B!") == 1);          // byte below 63
  CHECK(offset_of("~??") == 0);         // truncated long header
  CHECK(offset_of("~???") == 0);        // long form for n <= 62
}
