// Acceptance suite: each check prints one pass/fail line. Exit code is the
// number of failed checks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "domgame/domgame.hpp"

namespace {

using namespace domgame;

int g_jobs = 2;

const std::vector<Variant> kAllVariants = {
    Variant::domination(), Variant::total_domination(), Variant::z_domination(),
    Variant::l_domination(), Variant::ll_domination()};

std::vector<Graph> trees_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 2; n <= n_max; ++n)
    for (Graph& t : trees_of_order(n)) out.push_back(std::move(t));
  return out;
}

std::vector<Graph> random_corpus(int count, int n_max, std::uint64_t seed) {
  std::vector<Graph> out;
  std::mt19937_64 rng(mix_bits(seed));
  for (int i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - 1));
    out.push_back(random_connected(n, rng()));
  }
  return out;
}

bool criterion_c5(std::string& detail) {
  const Graph c5 = cycle_graph(5);
  const GameValues v = dominator_start_values(c5);
  const int ll_s = game_value(c5, Variant::ll_domination(), Player::staller);
  detail = v.to_string() + " llg'=" + std::to_string(ll_s);
  return v.zg == 3 && v.g == 3 && v.tg == 3 && v.lg == 3 && v.llg == 5 && ll_s % 2 == 0;
}

bool criterion_distinct_scan(std::string& detail) {
  const Report r = scan_distinct_values(11, g_jobs);
  detail = std::to_string(r.graphs_examined) + " trees, " +
           std::to_string(r.witnesses.size()) + " witnesses";
  if (!r.witness_note.empty()) detail += "; " + r.witness_note;
  return r.passed();
}

bool criterion_paths(std::string& detail) {
  const PathCheckReport r = check_path_formulas(18);
  bool closed_forms = true;
  for (const PathRow& row : r.rows) {
    if (row.n > 15) continue;
    closed_forms = closed_forms && row.values.g == expected_game_domination_path(row.n) &&
                   row.values.tg == expected_game_total_domination_path(row.n);
  }
  detail = std::to_string(r.report.violations.size()) + " violations, " +
           std::to_string(r.flags.size()) + " LL-band flags";
  return closed_forms && r.report.passed() && r.flags.empty();
}

bool criterion_theta(std::string& detail) {
  const PathCheckReport r = check_theta(16);
  detail = "floor reading matched " + r.report.params["p1_floor_matches"].dump() + "/" +
           r.report.params["p1_rows"].dump() + " rows, printed reading only " +
           r.report.params["p1_printed_matches"].dump();
  return r.report.passed();
}

bool criterion_property_suite(std::string& detail) {
  std::vector<Graph> corpus = trees_up_to(10);
  for (Graph& g : random_corpus(200, 9, 2024)) corpus.push_back(std::move(g));
  std::ostringstream os;
  bool ok = true;
  for (const Report& r :
       {check_hierarchy_suite(corpus, g_jobs), check_dual_gap_suite(corpus, g_jobs),
        check_parity_suite(corpus, g_jobs), check_llbound_suite(corpus, g_jobs),
        check_classical_bounds_suite(corpus, g_jobs),
        check_continuation_suite(corpus, 20, 99, g_jobs)}) {
    ok = ok && r.passed();
    os << r.suite << "=" << r.violations.size() << " ";
  }
  detail = std::to_string(corpus.size()) + " graphs; violations: " + os.str();
  return ok;
}

bool criterion_llbound_equality(std::string& detail) {
  bool ok = true;
  for (int copies = 1; copies <= 3; ++copies) {
    const Graph g = disjoint_union(std::vector<Graph>(copies, complete_graph(2)));
    ok = ok && game_value(g, Variant::ll_domination(), Player::dominator) == g.n() + 1;
  }
  std::vector<Graph> connected = trees_up_to(9);
  for (int n = 3; n <= 8; ++n) connected.push_back(cycle_graph(n));
  for (int n = 3; n <= 6; ++n) connected.push_back(complete_graph(n));
  for (Graph& g : random_corpus(30, 8, 7)) connected.push_back(std::move(g));
  int checked = 0;
  for (const Graph& g : connected) {
    if (g.n() == 2) continue;  // K_2 itself is the equality case
    ++checked;
    ok = ok && game_value(g, Variant::ll_domination(), Player::dominator) <= g.n();
  }
  detail = "3 K_2-unions at n+1; " + std::to_string(checked) +
           " connected non-K_2 graphs at <= n";
  return ok;
}

bool criterion_families(std::string& detail) {
  const Report r = check_special_families();
  detail = std::to_string(r.violations.size()) + " violations";
  for (const Violation& v : r.violations) detail += "; " + v.claim + " " + v.observed;
  return r.passed();
}

bool criterion_conjectures(std::string& detail) {
  const Report r = scan_conjectures(11, g_jobs);
  detail = std::to_string(r.graphs_examined) + " trees, " +
           std::to_string(r.violations.size()) + " violations, attainers: " +
           std::to_string(r.witnesses.size());
  if (!r.witness_note.empty()) detail += "; " + r.witness_note;
  return r.passed() && r.witnesses.size() == 1;
}

// Extended-scale runs behind --extended: the reversed value pattern first
// appears on 14-vertex trees, and the second 6/7-equality attainer is the
// Y-corona of K_2.
bool criterion_extended_scans(std::string& detail) {
  const Report distinct = scan_distinct_values(14, g_jobs);
  int reversed_at_14 = 0;
  bool reversed_values_ok = true;
  for (const ReportWitness& w : distinct.witnesses) {
    if (w.values.find("pattern=gtg<gg") == std::string::npos) continue;
    ++reversed_at_14;
    reversed_values_ok = reversed_values_ok &&
                         w.values.find("zg=5 g=7 tg=6 lg=8 llg=9") != std::string::npos &&
                         parse_graph6(w.graph6).n() == 14;
  }
  const Report conj = scan_conjectures(14, g_jobs);
  detail = std::to_string(reversed_at_14) + " reversed-pattern trees at order 14, " +
           std::to_string(conj.witnesses.size()) + " equality attainers";
  return distinct.passed() && reversed_at_14 == 7 && reversed_values_ok &&
         conj.passed() && conj.witnesses.size() == 2;
}

bool criterion_oracle_equivalence(std::string& detail) {
  std::vector<Graph> corpus = trees_up_to(7);
  for (Graph& g : random_corpus(100, 7, 555)) corpus.push_back(std::move(g));
  std::mt19937_64 rng(31337);
  std::uint64_t solves = 0;
  bool ok = true;
  for (const Graph& g : corpus) {
    std::vector<VertexSet> predominated_sets = {VertexSet{}};
    for (int i = 0; i < 10; ++i) {
      VertexSet pre;
      g.vertices().for_each([&](int v) {
        if (rng() & 1) pre.add(v);
      });
      predominated_sets.push_back(pre);
    }
    for (const Variant& variant : kAllVariants) {
      for (Player starter : {Player::dominator, Player::staller}) {
        for (const VertexSet& pre : predominated_sets) {
          ++solves;
          if (game_length(g, variant, starter, pre).length !=
              brute_length(g, variant, starter, pre)) {
            ok = false;
            detail = "mismatch on " + to_graph6(g) + " variant " + variant.code() +
                     " pre " + pre.to_string();
            return ok;
          }
        }
      }
    }
  }
  detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(solves) +
           " solver/brute pairs";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  g_jobs = std::max(1u, std::thread::hardware_concurrency());
  const bool extended = argc > 1 && std::string(argv[1]) == "--extended";
  struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "five-cycle values and LL parity", criterion_c5},
      {2, "distinct-value tree scan to order 11", criterion_distinct_scan},
      {3, "path formulas and residual bands", criterion_paths},
      {4, "theta exactness on predominated paths", criterion_theta},
      {5, "property suite over trees and random graphs", criterion_property_suite},
      {6, "LL bound equality characterization", criterion_llbound_equality},
      {7, "special family values", criterion_families},
      {8, "conjecture scans to order 11", criterion_conjectures},
      {9, "solver equals brute force", criterion_oracle_equivalence},
  };
  if (extended)
    criteria.push_back({10, "extended scans to order 14", criterion_extended_scans});

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s (%.2fs) %s%s%s\n", c.id, ok ? "PASS" : "FAIL", secs,
                c.name, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
