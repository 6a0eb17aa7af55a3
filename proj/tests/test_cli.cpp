#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "domgame/corpus.hpp"

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

std::string cli_path() {
  const char* path = std::getenv("DOMGAME_CLI");
  REQUIRE(path != nullptr);
  return path;
}

/// Runs the CLI with optional piped stdin, capturing stdout+stderr.
CliResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  std::string command;
  if (!stdin_data.empty()) command += "printf '" + stdin_data + "' | ";
  command += "'" + cli_path() + "' " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
    output.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("value command") {
  SECTION("five-cycle LL value") {
    CliResult r = run_cli("value --family cycle:5 --variant ll");
    INFO(r.output);
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.output, "length: 5"));
  }
  SECTION("predominated path, staller start") {
    CliResult r = run_cli(
        "value --family path:3 --variant ll --starter staller --predominated 0,2");
    INFO(r.output);
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.output, "length: 2"));
  }
  SECTION("graph6 input") {
    CliResult r = run_cli("value --graph6 A_ --variant d");
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.output, "length: 1"));
  }
  SECTION("json output round trips") {
    CliResult r = run_cli("value --family star:3 --variant d --json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    REQUIRE(j["length"] == 1);
    REQUIRE(j["variant"] == "d");
    REQUIRE(j["optimal_first"] == nlohmann::json::array({0}));
    REQUIRE(nlohmann::json::parse(j.dump()) == j);
  }
  SECTION("usage errors exit 2") {
    REQUIRE(run_cli("value --graph6 '>>bad'").exit_code == 2);
    REQUIRE(run_cli("value --family nonsense:4").exit_code == 2);
    REQUIRE(run_cli("value --family path:3 --variant q").exit_code == 2);
    REQUIRE(run_cli("value --family path:3 --predominated 9").exit_code == 2);
    REQUIRE(run_cli("value").exit_code == 2);
    REQUIRE(run_cli("bogus-subcommand").exit_code == 2);
  }
  SECTION("family grammar covers the composite constructions") {
    REQUIRE(run_cli("value --family leafy:2 --variant t").exit_code == 0);
    REQUIRE(run_cli("value --family ycorona:@ --variant l").exit_code == 0);
    CliResult r = run_cli("value --family cartesian:A_xCr --variant z");
    INFO(r.output);
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.output, "n=8"));
  }
}

TEST_CASE("verify command") {
  SECTION("hierarchy over small trees passes") {
    CliResult r = run_cli("verify --suite hierarchy --trees-up-to 6");
    INFO(r.output);
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.output, "pass"));
  }
  SECTION("paths suite") {
    CliResult r = run_cli("verify --suite paths --n-max 10");
    REQUIRE(r.exit_code == 0);
  }
  SECTION("llbound with a graph6 corpus file") {
    const std::string path = "cli_test_k2_union.g6";
    {
      std::ofstream out(path);
      out << domgame::to_graph6(domgame::disjoint_union(
                 {domgame::complete_graph(2), domgame::complete_graph(2)}))
          << '\n';
    }
    CliResult r = run_cli("verify --suite llbound --graph6-file " + path);
    std::remove(path.c_str());
    INFO(r.output);
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.output, "1 witnesses"));
  }
  SECTION("json report lands in the output file") {
    const std::string path = "cli_test_report.json";
    CliResult r = run_cli("verify --suite parity --trees-up-to 5 --out " + path);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json j = nlohmann::json::parse(in);
    std::remove(path.c_str());
    REQUIRE(j["suite"] == "parity");
    REQUIRE(j["passed"] == true);
  }
  SECTION("unknown suite exits 2") {
    REQUIRE(run_cli("verify --suite nonsense").exit_code == 2);
    REQUIRE(run_cli("verify").exit_code == 2);
  }
  SECTION("csv summary row") {
    CliResult r = run_cli("verify --suite families --csv");
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.output, "suite,graphs_examined"));
    REQUIRE(contains(r.output, "families,4,0,0,"));
  }
}

TEST_CASE("scan command") {
  CliResult r = run_cli("scan --what distinct-values --n-max 7 --jobs 2");
  INFO(r.output);
  REQUIRE(r.exit_code == 0);
  REQUIRE(run_cli("scan --what nonsense").exit_code == 2);
}

TEST_CASE("corpus command") {
  CliResult r = run_cli("corpus --trees 5");
  REQUIRE(r.exit_code == 0);
  // three trees on five vertices, one graph6 line each
  std::istringstream is(r.output);
  auto graphs = domgame::read_graph6_lines(is);
  REQUIRE(graphs.size() == 3);
  for (const auto& g : graphs) REQUIRE(g.n() == 5);

  REQUIRE(run_cli("corpus").exit_code == 2);
  REQUIRE(run_cli("corpus --random 3").exit_code == 2);
}

TEST_CASE("play command") {
  SECTION("legal repeat accepted on K_2") {
    // Engine (Dominator) opens with 0; the human repeat of 0 is legal in LL.
    CliResult r = run_cli("play --graph6 A_ --variant ll --human staller", "0\\n");
    INFO(r.output);
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.output, "game over after 3 moves"));
    REQUIRE(contains(r.output, "optimal play gives 3"));
  }
  SECTION("replayed vertex rejected in the L-game") {
    CliResult r = run_cli("play --family path:3 --variant l --human dominator",
                          "0\\n0\\n1\\n");
    INFO(r.output);
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.output, "already played"));
    REQUIRE(contains(r.output, "game over after 3 moves"));
  }
  SECTION("covered-neighborhood rejection names the neighborhood") {
    // Star, human dominator: leaf 1, engine answers 2, then N[1] is covered.
    CliResult r = run_cli("play --family star:3 --variant d --human dominator",
                          "1\\n1\\n3\\n");
    INFO(r.output);
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.output, "N[v] of 1 is already fully covered"));
    REQUIRE(contains(r.output, "game over after 3 moves"));
  }
  SECTION("stream ending mid-game exits 2") {
    CliResult r = run_cli("play --graph6 A_ --variant d --human dominator", "\\n");
    REQUIRE(r.exit_code == 2);
    REQUIRE(contains(r.output, "input ended"));
  }
}
