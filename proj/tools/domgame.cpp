// Command-line front end: exact values, verification suites, corpus export,
// and an interactive play mode against the optimal engine.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domgame/domgame.hpp"

namespace {

using namespace domgame;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Family mini-grammar: path:N, cycle:N, star:K, complete:N, leafy:N,
/// ycorona:<graph6>, cartesian:<graph6>x<graph6>.
Graph parse_family(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw UsageError("family spec needs a ':' (e.g. path:5)");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  auto as_int = [&arg]() {
    try {
      std::size_t used = 0;
      const int value = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
      return value;
    } catch (const std::exception&) {
      throw UsageError("family parameter is not a number: " + arg);
    }
  };
  try {
    if (kind == "path") return path_graph(as_int());
    if (kind == "cycle") return cycle_graph(as_int());
    if (kind == "star") return star_graph(as_int());
    if (kind == "complete") return complete_graph(as_int());
    if (kind == "leafy") return leafy_clique(as_int());
    if (kind == "ycorona") return y_corona(parse_graph6(arg));
    if (kind == "cartesian") {
      // the separator is the first 'x' splitting arg into two valid graph6
      // strings ('x' itself is a legal graph6 byte)
      for (std::size_t i = 0; i < arg.size(); ++i) {
        if (arg[i] != 'x') continue;
        try {
          Graph left = parse_graph6(arg.substr(0, i));
          Graph right = parse_graph6(arg.substr(i + 1));
          return cartesian_product(left, right);
        } catch (const Graph6Error&) {
        }
      }
      throw UsageError("cartesian spec must be <graph6>x<graph6>");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const Graph6Error& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family kind: " + kind);
}

Graph load_graph(const std::string& graph6, const std::string& family) {
  if (graph6.empty() == family.empty())
    throw UsageError("give exactly one of --graph6 and --family");
  if (!graph6.empty()) {
    try {
      return parse_graph6(graph6);
    } catch (const Graph6Error& e) {
      throw UsageError(e.what());
    }
  }
  return parse_family(family);
}

VertexSet parse_vertex_list(const std::string& csv, int n) {
  VertexSet out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0 || v >= n)
        throw std::invalid_argument(item);
      out.add(v);
    } catch (const std::exception&) {
      throw UsageError("bad vertex index '" + item + "' (graph has " +
                       std::to_string(n) + " vertices)");
    }
  }
  return out;
}

Player parse_player(const std::string& name) {
  if (name == "dominator") return Player::dominator;
  if (name == "staller") return Player::staller;
  throw UsageError("player must be 'dominator' or 'staller'");
}

// -- value --------------------------------------------------------------------

struct ValueArgs {
  std::string graph6, family, variant = "d", starter = "dominator", predominated;
  std::size_t memo_limit = SolveOptions{}.memo_limit;
  bool json = false;
};

int run_value(const ValueArgs& args) {
  const Graph g = load_graph(args.graph6, args.family);
  const Variant variant = Variant::from_code(args.variant);
  const Player starter = parse_player(args.starter);
  const VertexSet pre = parse_vertex_list(args.predominated, g.n());
  SolveOptions opts;
  opts.memo_limit = args.memo_limit;
  SolveResult result;
  try {
    result = game_length(g, variant, starter, pre, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (args.json) {
    nlohmann::json j;
    j["graph"] = to_graph6(g);
    j["variant"] = variant.code();
    j["starter"] = args.starter;
    j["predominated"] = pre.to_vector();
    j["length"] = result.length;
    j["optimal_first"] = result.optimal_first.to_vector();
    j["states_visited"] = result.states_visited;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "graph " << to_graph6(g) << " (n=" << g.n() << "), variant "
              << variant.code() << ", " << args.starter << " starts";
    if (pre.any()) std::cout << ", predominated " << pre.to_string();
    std::cout << "\nlength: " << result.length
              << "\noptimal first moves: " << result.optimal_first.to_string()
              << "\nstates visited: " << result.states_visited << '\n';
  }
  return kExitPass;
}

// -- verify / scan ------------------------------------------------------------

struct CorpusArgs {
  int trees_up_to = 0;
  int random_count = 0;
  int random_n_max = 9;
  std::uint64_t seed = 1;
  std::string graph6_file;
};

std::vector<Graph> assemble_corpus(const CorpusArgs& args) {
  std::vector<Graph> corpus;
  for (int n = 2; n <= args.trees_up_to; ++n)
    for (Graph& t : trees_of_order(n)) corpus.push_back(std::move(t));
  if (args.random_count > 0) {
    if (args.random_n_max < 2) throw UsageError("--random-n-max must be at least 2");
    std::mt19937_64 rng(mix_bits(args.seed));
    for (int i = 0; i < args.random_count; ++i) {
      const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                             args.random_n_max - 1));
      corpus.push_back(random_connected(n, rng()));
    }
  }
  if (!args.graph6_file.empty()) {
    std::ifstream in(args.graph6_file);
    if (!in) throw UsageError("cannot open " + args.graph6_file);
    try {
      for (Graph& g : read_graph6_lines(in)) corpus.push_back(std::move(g));
    } catch (const Graph6Error& e) {
      throw UsageError(e.what());
    }
  }
  return corpus;
}

void emit_report(const nlohmann::json& j, const std::string& out_path, bool csv,
                 const Report& report) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    out << j.dump(2) << '\n';
  }
  if (csv) {
    std::cout << Report::csv_header() << '\n' << report.csv_row() << '\n';
    return;
  }
  std::cout << report.suite << ": " << (report.passed() ? "pass" : "FAIL") << " ("
            << report.graphs_examined << " graphs, " << report.violations.size()
            << " violations, " << report.witnesses.size() << " witnesses, "
            << report.elapsed_seconds << "s)\n";
  for (const Violation& v : report.violations)
    std::cout << "  violation " << v.claim << " on " << v.graph6 << ": " << v.observed
              << '\n';
  if (!report.witness_note.empty()) std::cout << "  note: " << report.witness_note << '\n';
}

struct VerifyArgs {
  std::string suite;
  CorpusArgs corpus;
  int n_max = 0;
  int samples = 20;
  int jobs = 1;
  std::string out;
  bool csv = false;
};

int run_verify(const VerifyArgs& args) {
  std::vector<Report> reports;
  nlohmann::json json_out;

  auto corpus_for = [&args](int default_trees) {
    CorpusArgs c = args.corpus;
    if (c.trees_up_to == 0 && c.random_count == 0 && c.graph6_file.empty())
      c.trees_up_to = default_trees;
    return assemble_corpus(c);
  };

  auto run_one = [&](const std::string& name) {
    if (name == "paths") {
      PathCheckReport r = check_path_formulas(args.n_max > 0 ? args.n_max : 15);
      json_out = r.to_json();
      return r.report;
    }
    if (name == "theta") {
      PathCheckReport r = check_theta(args.n_max > 0 ? args.n_max : 16);
      json_out = r.to_json();
      return r.report;
    }
    if (name == "families") {
      Report r = check_special_families();
      json_out = r.to_json();
      return r;
    }
    const std::vector<Graph> corpus = corpus_for(8);
    Report r;
    if (name == "hierarchy")
      r = check_hierarchy_suite(corpus, args.jobs);
    else if (name == "dualgap")
      r = check_dual_gap_suite(corpus, args.jobs);
    else if (name == "parity")
      r = check_parity_suite(corpus, args.jobs);
    else if (name == "llbound")
      r = check_llbound_suite(corpus, args.jobs);
    else if (name == "bounds")
      r = check_classical_bounds_suite(corpus, args.jobs);
    else if (name == "continuation")
      r = check_continuation_suite(corpus, args.samples, args.corpus.seed, args.jobs);
    else
      throw UsageError("unknown suite: " + name);
    json_out = r.to_json();
    return r;
  };

  if (args.suite == "all") {
    nlohmann::json array = nlohmann::json::array();
    bool all_pass = true;
    for (const char* name : {"paths", "theta", "families", "hierarchy", "dualgap",
                             "parity", "llbound", "bounds", "continuation"}) {
      Report r = run_one(name);
      emit_report(json_out, "", false, r);
      array.push_back(json_out);
      all_pass = all_pass && r.passed();
    }
    if (!args.out.empty()) {
      std::ofstream out(args.out);
      if (!out) throw UsageError("cannot write " + args.out);
      out << array.dump(2) << '\n';
    }
    return all_pass ? kExitPass : kExitViolation;
  }

  Report report = run_one(args.suite);
  emit_report(json_out, args.out, args.csv, report);
  return report.passed() ? kExitPass : kExitViolation;
}

struct ScanArgs {
  std::string what;
  int n_max = 11;
  int jobs = 1;
  std::string out;
  bool csv = false;
};

int run_scan(const ScanArgs& args) {
  Report report;
  if (args.what == "distinct-values")
    report = scan_distinct_values(args.n_max, args.jobs);
  else if (args.what == "conjectures")
    report = scan_conjectures(args.n_max, args.jobs);
  else
    throw UsageError("unknown scan: " + args.what);
  emit_report(report.to_json(), args.out, args.csv, report);
  if (!args.csv)
    for (const ReportWitness& w : report.witnesses)
      std::cout << "  witness " << w.graph6 << ": " << w.values << '\n';
  return report.passed() ? kExitPass : kExitViolation;
}

// -- corpus -------------------------------------------------------------------

struct CorpusCmdArgs {
  int trees = 0;
  int trees_up_to = 0;
  int random_count = 0;
  int random_n = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int run_corpus(const CorpusCmdArgs& args) {
  std::vector<Graph> graphs;
  if (args.trees > 0)
    for (Graph& t : trees_of_order(args.trees)) graphs.push_back(std::move(t));
  for (int n = 2; n <= args.trees_up_to; ++n)
    for (Graph& t : trees_of_order(n)) graphs.push_back(std::move(t));
  if (args.random_count > 0) {
    if (args.random_n < 2) throw UsageError("--n is required with --random");
    std::mt19937_64 rng(mix_bits(args.seed));
    for (int i = 0; i < args.random_count; ++i)
      graphs.push_back(random_connected(args.random_n, rng()));
  }
  if (graphs.empty()) throw UsageError("nothing to export");
  if (args.out.empty()) {
    write_graph6_lines(std::cout, graphs);
  } else {
    std::ofstream out(args.out);
    if (!out) throw UsageError("cannot write " + args.out);
    write_graph6_lines(out, graphs);
  }
  return kExitPass;
}

// -- play ---------------------------------------------------------------------

struct PlayArgs {
  std::string graph6, family, variant = "d", human = "staller", predominated;
};

std::string newness_name(Variant v) {
  return v.newness == Neighborhood::closed ? "N[v]" : "N(v)";
}

int run_play(const PlayArgs& args) {
  const Graph g = load_graph(args.graph6, args.family);
  const Variant variant = Variant::from_code(args.variant);
  const Player human = parse_player(args.human);
  const VertexSet pre = parse_vertex_list(args.predominated, g.n());

  GameState state = [&] {
    try {
      return new_state(g, variant, pre, Player::dominator);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const int optimal = solve_state(state).length;

  std::cout << "playing the " << variant.code() << "-game on " << to_graph6(g)
            << " (n=" << g.n() << "), you are " << player_name(human) << '\n';
  if (pre.any()) std::cout << "predominated: " << pre.to_string() << '\n';

  while (!is_terminal(state)) {
    const VertexSet legal = legal_moves(state);
    std::cout << "covered " << state.covered().to_string();
    if (variant.no_repeat) std::cout << ", unavailable " << state.forbidden().to_string();
    std::cout << ", " << player_name(state.to_move()) << " to move\n";
    if (state.to_move() == human) {
      int v = -1;
      while (true) {
        std::cout << "your move " << legal.to_string() << "> " << std::flush;
        std::string token;
        if (!(std::cin >> token)) {
          std::cout << "\ninput ended mid-game\n";
          return kExitUsage;
        }
        try {
          v = std::stoi(token);
        } catch (const std::exception&) {
          std::cout << "not a vertex index: " << token << '\n';
          continue;
        }
        if (v < 0 || v >= g.n()) {
          std::cout << "no vertex " << v << '\n';
          continue;
        }
        if (!legal.contains(v)) {
          if ((newness_neighborhood(g, variant, v) - state.covered()).empty())
            std::cout << "illegal: " << newness_name(variant) << " of " << v
                      << " is already fully covered\n";
          else
            std::cout << "illegal: vertex " << v << " was already played\n";
          continue;
        }
        break;
      }
      state = apply(state, v);
      std::cout << "you played " << v << '\n';
    } else {
      const SolveResult res = solve_state(state);
      const int v = res.optimal_first.lowest();
      state = apply(state, v);
      std::cout << player_name(opponent(human)) << " plays " << v << '\n';
    }
  }
  std::cout << "game over after " << state.moves_made() << " moves; optimal play gives "
            << optimal << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and verification harness for the five domination games"};
  app.require_subcommand(1);

  ValueArgs value_args;
  CLI::App* value = app.add_subcommand("value", "compute a game value");
  value->add_option("--graph6", value_args.graph6, "graph as a graph6 string");
  value->add_option("--family", value_args.family,
                    "family spec (path:N, cycle:N, star:K, complete:N, leafy:N, "
                    "ycorona:<g6>, cartesian:<g6>x<g6>)");
  value->add_option("--variant", value_args.variant, "game variant: d, t, z, l, ll");
  value->add_option("--starter", value_args.starter, "dominator or staller");
  value->add_option("--predominated", value_args.predominated,
                    "comma-separated pre-dominated vertices");
  value->add_option("--memo-limit", value_args.memo_limit,
                    "abort after this many transposition entries");
  value->add_flag("--json", value_args.json, "emit JSON");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", verify_args.suite,
                     "paths, theta, families, hierarchy, dualgap, parity, llbound, "
                     "bounds, continuation, or all")
      ->required();
  verify->add_option("--trees-up-to", verify_args.corpus.trees_up_to,
                     "corpus: all trees with 2..N vertices");
  verify->add_option("--random", verify_args.corpus.random_count,
                     "corpus: K seeded random connected graphs");
  verify->add_option("--random-n-max", verify_args.corpus.random_n_max,
                     "max order of random corpus graphs");
  verify->add_option("--seed", verify_args.corpus.seed, "corpus / sampling seed");
  verify->add_option("--graph6-file", verify_args.corpus.graph6_file,
                     "corpus: newline-separated graph6 file");
  verify->add_option("--n-max", verify_args.n_max, "range for paths/theta suites");
  verify->add_option("--samples", verify_args.samples,
                     "continuation: chains sampled per graph");
  verify->add_option("--jobs", verify_args.jobs, "worker threads over the corpus");
  verify->add_option("--out", verify_args.out, "write the JSON report here");
  verify->add_flag("--csv", verify_args.csv, "print a CSV summary row");

  ScanArgs scan_args;
  CLI::App* scan = app.add_subcommand("scan", "tree scans");
  scan->add_option("--what", scan_args.what, "distinct-values or conjectures")->required();
  scan->add_option("--n-max", scan_args.n_max, "scan trees up to this order");
  scan->add_option("--jobs", scan_args.jobs, "worker threads");
  scan->add_option("--out", scan_args.out, "write the JSON report here");
  scan->add_flag("--csv", scan_args.csv, "print a CSV summary row");

  CorpusCmdArgs corpus_args;
  CLI::App* corpus = app.add_subcommand("corpus", "export graphs as graph6 lines");
  corpus->add_option("--trees", corpus_args.trees, "all trees of exactly this order");
  corpus->add_option("--trees-up-to", corpus_args.trees_up_to,
                     "all trees with 2..N vertices");
  corpus->add_option("--random", corpus_args.random_count, "K random connected graphs");
  corpus->add_option("--n", corpus_args.random_n, "order of the random graphs");
  corpus->add_option("--seed", corpus_args.seed, "seed for the random graphs");
  corpus->add_option("--out", corpus_args.out, "output file (default stdout)");

  PlayArgs play_args;
  CLI::App* play = app.add_subcommand("play", "play against the optimal engine");
  play->add_option("--graph6", play_args.graph6, "graph as a graph6 string");
  play->add_option("--family", play_args.family, "family spec");
  play->add_option("--variant", play_args.variant, "game variant: d, t, z, l, ll");
  play->add_option("--human", play_args.human, "side you play: dominator or staller");
  play->add_option("--predominated", play_args.predominated,
                   "comma-separated pre-dominated vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (value->parsed()) return run_value(value_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (scan->parsed()) return run_scan(scan_args);
    if (corpus->parsed()) return run_corpus(corpus_args);
    if (play->parsed()) return run_play(play_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
