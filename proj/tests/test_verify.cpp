#include <catch2/catch_amalgamated.hpp>

#include "domgame/verify.hpp"

using namespace domgame;

namespace {

std::vector<Graph> small_corpus() {
  std::vector<Graph> corpus;
  for (int n = 2; n <= 7; ++n)
    for (Graph& t : trees_of_order(n)) corpus.push_back(std::move(t));
  corpus.push_back(cycle_graph(5));
  corpus.push_back(complete_graph(4));
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    corpus.push_back(random_connected(3 + static_cast<int>(seed % 5), seed));
  return corpus;
}

}  // namespace

TEST_CASE("path formulas at small scale") {
  PathCheckReport r = check_path_formulas(10);
  REQUIRE(r.report.passed());
  REQUIRE(r.rows.size() == 9);
  REQUIRE(r.rows.front().n == 2);
  REQUIRE(r.flags.empty());
  // gg(P_7) = ceil(7/2)-1, gtg(P_5) = floor(10/3), gzg(P_2) = 1
  REQUIRE(r.rows[5].values.g == 3);
  REQUIRE(r.rows[3].values.tg == 3);
  REQUIRE(r.rows[0].values.zg == 1);
  REQUIRE(expected_game_domination_path(7) == 3);
  REQUIRE(expected_game_total_domination_path(5) == 3);
}

TEST_CASE("theta closed forms") {
  REQUIRE(theta_p1_floor(10) == 8);
  REQUIRE(theta_p1_floor(3) == 2);
  REQUIRE(theta_p1_printed(3) == 6);
  REQUIRE(theta_p2(5) == 2);

  PathCheckReport r = check_theta(10);
  REQUIRE(r.report.passed());
  REQUIRE(r.theta_rows.front().n == 3);
  REQUIRE(r.theta_rows.front().ll_s_p1 == 2);
  REQUIRE(r.theta_rows.front().theta1_printed == 6);
  // the report records how the two readings fared
  REQUIRE(r.report.params["p1_floor_matches"] == r.report.params["p1_rows"]);
  REQUIRE(r.report.params["p1_printed_matches"] < r.report.params["p1_rows"]);
  REQUIRE_THROWS_AS(check_theta(25), std::invalid_argument);
}

TEST_CASE("corpus suites pass on the small corpus") {
  const std::vector<Graph> corpus = small_corpus();
  for (const Report& r :
       {check_hierarchy_suite(corpus), check_dual_gap_suite(corpus),
        check_parity_suite(corpus), check_llbound_suite(corpus),
        check_classical_bounds_suite(corpus),
        check_continuation_suite(corpus, 5, 12345)}) {
    INFO(r.suite);
    REQUIRE(r.passed());
    REQUIRE(r.graphs_examined == static_cast<std::int64_t>(corpus.size()));
  }
}

TEST_CASE("suites are deterministic and job-count independent") {
  const std::vector<Graph> corpus = small_corpus();
  Report serial = check_llbound_suite(corpus, 1);
  Report parallel = check_llbound_suite(corpus, 2);
  REQUIRE(serial.to_json()["violations"] == parallel.to_json()["violations"]);
  REQUIRE(serial.to_json()["witnesses"] == parallel.to_json()["witnesses"]);
  Report c1 = check_continuation_suite(corpus, 5, 7, 1);
  Report c2 = check_continuation_suite(corpus, 5, 7, 2);
  REQUIRE(c1.to_json()["violations"] == c2.to_json()["violations"]);
}

TEST_CASE("llbound equality witnesses") {
  std::vector<Graph> corpus;
  for (int copies = 1; copies <= 3; ++copies)
    corpus.push_back(disjoint_union(std::vector<Graph>(copies, complete_graph(2))));
  corpus.push_back(cycle_graph(5));
  Report r = check_llbound_suite(corpus);
  REQUIRE(r.passed());
  REQUIRE(r.witnesses.size() == 3);  // exactly the K_2 unions
  for (const ReportWitness& w : r.witnesses) {
    Graph g = parse_graph6(w.graph6);
    for (const VertexSet& comp : components(g)) REQUIRE(comp.count() == 2);
  }
}

TEST_CASE("continuation principle spot values") {
  Graph k2 = complete_graph(2);
  REQUIRE(game_value(k2, Variant::ll_domination(), Player::staller, VertexSet::all(2)) == 0);
  REQUIRE(game_value(k2, Variant::ll_domination(), Player::staller) == 2);
  Graph p3 = path_graph(3);
  REQUIRE(game_value(p3, Variant::z_domination(), Player::dominator, VertexSet::single(1)) <=
          game_value(p3, Variant::z_domination(), Player::dominator));
}

TEST_CASE("distinct-value scan finds nothing below 11") {
  Report r = scan_distinct_values(8);
  REQUIRE(r.passed());
  REQUIRE(r.witnesses.empty());
  REQUIRE(r.params["min_order_gg_first"] == 0);
}

TEST_CASE("the unique 11-vertex separating tree is the caterpillar") {
  // spine 0-1-2-3-4-5-6, pendant leaves on 1,2,3,4
  const Graph caterpillar(11, {{0, 1},
                               {1, 2},
                               {2, 3},
                               {3, 4},
                               {4, 5},
                               {5, 6},
                               {1, 7},
                               {2, 8},
                               {3, 9},
                               {4, 10}});
  std::vector<Graph> found;
  for (const Graph& t : trees_of_order(11)) {
    const GameValues v = dominator_start_values(t);
    int vals[5] = {v.zg, v.g, v.tg, v.lg, v.llg};
    std::sort(std::begin(vals), std::end(vals));
    if (std::adjacent_find(std::begin(vals), std::end(vals)) == std::end(vals))
      found.push_back(t);
  }
  REQUIRE(found.size() == 1);
  REQUIRE(tree_canonical_string(found[0]) == tree_canonical_string(caterpillar));
}

TEST_CASE("conjecture scan at n_max 7 finds exactly the spider") {
  Report r = scan_conjectures(7, 2);
  REQUIRE(r.passed());
  REQUIRE(r.violations.empty());
  REQUIRE(r.witnesses.size() == 1);
  Graph attainer = parse_graph6(r.witnesses[0].graph6);
  REQUIRE(tree_canonical_string(attainer) ==
          tree_canonical_string(y_corona(complete_graph(1))));
}

TEST_CASE("special families report") {
  Report r = check_special_families();
  REQUIRE(r.passed());
  REQUIRE(r.graphs_examined == 4);
  REQUIRE(r.violations.empty());
}

TEST_CASE("star products collapse the hierarchy at a second instance") {
  // k >= 2*n(G) forces gzg = gllg = 2*n(G)-1, here with G = P_3, k = 6.
  Graph h = cartesian_product(path_graph(3), star_graph(6));
  REQUIRE(h.n() == 21);
  REQUIRE(game_value(h, Variant::z_domination(), Player::dominator) == 5);
  REQUIRE(game_value(h, Variant::ll_domination(), Player::dominator) == 5);
}

TEST_CASE("report serialization") {
  Report r = check_llbound_suite({});
  REQUIRE(r.passed());
  REQUIRE(r.graphs_examined == 0);
  nlohmann::json j = r.to_json();
  REQUIRE(j["suite"] == "llbound");
  REQUIRE(j["violations"].is_array());
  REQUIRE(j["witnesses"].is_array());
  REQUIRE(j["passed"] == true);
  // round trip: parse and re-emit
  REQUIRE(nlohmann::json::parse(j.dump()) == j);
  REQUIRE(Report::csv_header().rfind("suite,", 0) == 0);
  REQUIRE(r.csv_row().rfind("llbound,0,0,0,", 0) == 0);
}
