#include <catch2/catch_amalgamated.hpp>

#include "domgame/corpus.hpp"
#include "domgame/graph6.hpp"

#include "oracles.hpp"

using namespace domgame;

TEST_CASE("graph6 frozen encodings") {
  // Hand-encoded per the format: K_2 = 'A' (n=2) + "100000" -> '_'.
  REQUIRE(to_graph6(complete_graph(2)) == "A_");
  // P_3: bits (0,1),(0,2),(1,2) = 101, padded "101000" -> 'g'.
  REQUIRE(to_graph6(path_graph(3)) == "Bg");
  REQUIRE(to_graph6(Graph(2, {})) == "A?");

  REQUIRE(parse_graph6("A_") == complete_graph(2));
  REQUIRE(parse_graph6("Bg") == path_graph(3));
  REQUIRE(parse_graph6("A?") == Graph(2, {}));
}

TEST_CASE("graph6 matches the reference encoder") {
  std::vector<Graph> corpus = {path_graph(1),    path_graph(2),     path_graph(7),
                               cycle_graph(5),   complete_graph(6), star_graph(9),
                               leafy_clique(3),  y_corona(complete_graph(2)),
                               random_connected(17, 42), random_connected(30, 7)};
  for (const Graph& g : corpus) {
    REQUIRE(to_graph6(g) == oracles::ref_graph6(g));
    REQUIRE(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 round trip over trees") {
  for (int n = 1; n <= 8; ++n) {
    TreeStream stream(n);
    while (auto t = stream.next()) {
      REQUIRE(parse_graph6(to_graph6(*t)) == *t);
      REQUIRE(to_graph6(*t) == oracles::ref_graph6(*t));
    }
  }
}

TEST_CASE("graph6 long size form") {
  if (vertex_cap < 63) return;
  Graph big = path_graph(63);
  std::string enc = to_graph6(big);
  REQUIRE(enc[0] == 126);
  REQUIRE(enc == oracles::ref_graph6(big));
  REQUIRE(parse_graph6(enc) == big);
}

TEST_CASE("graph6 parse errors are distinct") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_graph6(text);
    } catch (const Graph6Error& e) {
      return e.kind();
    }
    throw std::runtime_error("expected a parse failure");
  };
  REQUIRE(kind_of("") == Graph6Error::Kind::bad_header);
  REQUIRE(kind_of(">>graph6<<A_") == Graph6Error::Kind::bad_header);
  REQUIRE(kind_of("\x07g") == Graph6Error::Kind::bad_header);
  REQUIRE(kind_of("B") == Graph6Error::Kind::truncated);
  REQUIRE(kind_of("A_g") == Graph6Error::Kind::trailing_garbage);
  // 6-bit size of 63+63 = vertex count 63 fits the cap only in 128-bit builds;
  // a million-vertex header never does.
  REQUIRE(kind_of("~~????@") == Graph6Error::Kind::cap_exceeded);
  REQUIRE(kind_of(std::string("~") + "?~?" + std::string(100, '?')) ==
          Graph6Error::Kind::cap_exceeded);
  // K_2 with a nonzero padding bit.
  REQUIRE(kind_of("A`") == Graph6Error::Kind::trailing_garbage);
}
