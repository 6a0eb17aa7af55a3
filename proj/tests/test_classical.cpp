#include <catch2/catch_amalgamated.hpp>

#include "domgame/classical.hpp"
#include "domgame/corpus.hpp"

#include "oracles.hpp"

using namespace domgame;

TEST_CASE("domination numbers of named graphs") {
  REQUIRE(domination_number(star_graph(3)) == 1);
  REQUIRE(domination_number(cycle_graph(5)) == 2);
  REQUIRE(domination_number(leafy_clique(2)) == 2);
  REQUIRE(total_domination_number(complete_graph(2)) == 2);
  REQUIRE(total_domination_number(cycle_graph(5)) == 3);
  // gamma_t(F_n) = n
  for (int n = 2; n <= 4; ++n) REQUIRE(total_domination_number(leafy_clique(n)) == n);
}

TEST_CASE("total domination rejects isolated vertices") {
  Graph isolated(3, {{0, 1}});
  REQUIRE_THROWS_AS(total_domination_number(isolated), std::invalid_argument);
  // plain domination is still defined
  REQUIRE(domination_number(isolated) == 2);
}

TEST_CASE("classical numbers match the subset brute force") {
  for (int n = 2; n <= 8; ++n) {
    TreeStream stream(n);
    while (auto t = stream.next()) {
      REQUIRE(domination_number(*t) == oracles::subset_min_domination(*t, false));
      REQUIRE(total_domination_number(*t) == oracles::subset_min_domination(*t, true));
    }
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = random_connected(4 + static_cast<int>(seed % 7), seed);
    REQUIRE(domination_number(g) == oracles::subset_min_domination(g, false));
    REQUIRE(total_domination_number(g) == oracles::subset_min_domination(g, true));
  }
}

TEST_CASE("gamma <= gamma_t <= 2 gamma") {
  for (int n = 2; n <= 9; ++n) {
    TreeStream stream(n);
    while (auto t = stream.next()) {
      ClassicalResult c = classical_numbers(*t);
      REQUIRE(1 <= c.gamma);
      REQUIRE(c.gamma <= c.gamma_t);
      REQUIRE(c.gamma_t <= 2 * c.gamma);
      REQUIRE(c.gamma_t >= 2);
    }
  }
}
