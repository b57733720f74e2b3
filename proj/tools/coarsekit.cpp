// coarsekit command-line driver.
//
// Exit codes: 0 ok, 2 input/usage error, 3 hypothesis-failure witness, 4 internal
// assertion failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coarsekit/coarsekit.hpp"
#include "coarsekit/corpus.hpp"
#include "coarsekit/document.hpp"
#include "coarsekit/laws.hpp"

namespace ck = coarsekit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitInternal = 4;

std::string g_command_line;

struct UsageError : ck::InputError {
  using ck::InputError::InputError;
};

std::size_t natural(long long value, const char* flag) {
  if (value < 0) throw UsageError(std::string(flag) + " must be nonnegative");
  return static_cast<std::size_t>(value);
}

std::size_t parse_size(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size()) throw UsageError(std::string("bad ") + what + ": " + text);
    return natural(v, what);
  } catch (const std::logic_error&) {
    throw UsageError(std::string("bad ") + what + ": " + text);
  }
}

std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_size(item, what));
  return out;
}

ck::Graph load_graph(const std::string& path) { return ck::io::parse_graph(ck::corpus::read_file(path)); }

/// "1,4,7", "all", "branch-vertices" (degree >= 3) or "" (empty).
ck::VertexSet parse_vertex_list(const ck::Graph& g, const std::string& text) {
  if (text == "all") return ck::VertexSet::range(static_cast<ck::Vertex>(g.n()));
  if (text == "branch-vertices") {
    std::vector<ck::Vertex> out;
    for (ck::Vertex v = 0; v < g.n(); ++v)
      if (g.degree(v) >= 3) out.push_back(v);
    return ck::VertexSet(std::move(out));
  }
  std::vector<ck::Vertex> out;
  for (auto v : parse_list(text, "vertex id")) out.push_back(static_cast<ck::Vertex>(v));
  ck::VertexSet s(std::move(out));
  g.check_set(s);
  return s;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

// ---------------------------------------------------------------------------
// gen

ck::Graph generate(const std::string& family, const std::vector<std::string>& args, std::uint64_t seed) {
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw UsageError("family " + family + " takes " + std::to_string(count) + " size argument(s)");
    }
  };
  const std::string prefix = "two-subdivision-of:";
  if (family.rfind(prefix, 0) == 0) return ck::two_subdivision(generate(family.substr(prefix.size()), args, seed)).graph;
  if (family == "path") return need(1), ck::gen::path(parse_size(args[0], "size"));
  if (family == "cycle") return need(1), ck::gen::cycle(parse_size(args[0], "size"));
  if (family == "complete") return need(1), ck::gen::complete(parse_size(args[0], "size"));
  if (family == "grid") return need(2), ck::gen::grid(parse_size(args[0], "rows"), parse_size(args[1], "columns"));
  if (family == "biclique") return need(2), ck::gen::complete_bipartite(parse_size(args[0], "s"), parse_size(args[1], "t"));
  if (family == "tree") return need(1), ck::gen::random_tree(parse_size(args[0], "size"), seed);
  if (family == "cactus") return need(1), ck::gen::random_cactus(parse_size(args[0], "size"), seed);
  if (family == "random") {
    need(2);
    double p = 0;
    try {
      std::size_t used = 0;
      p = std::stod(args[1], &used);
      if (used != args[1].size()) throw UsageError("bad probability " + args[1]);
    } catch (const std::logic_error&) {
      throw UsageError("bad probability " + args[1]);
    }
    return ck::gen::random(parse_size(args[0], "size"), p, seed);
  }
  throw UsageError("unknown family " + family);
}

// ---------------------------------------------------------------------------
// analyze

json analyze(const ck::Graph& g) {
  json report = {{"n", g.n()}, {"m", g.m()}};
  auto guarded = [&](const char* key, auto&& compute) {
    try {
      report[key] = compute();
    } catch (const ck::ScaleError& e) {
      report[key] = {{"omitted", e.what()}};
    }
  };
  guarded("alpha", [&] {
    auto a = ck::alpha(g);
    return json{{"value", a.value}, {"witness", a.witness.ids()}};
  });
  guarded("treewidth", [&] {
    auto tw = ck::exact_treewidth(g);
    return json{{"value", tw.value}, {"elimination_order", tw.elimination_order}};
  });
  guarded("separation_number_indicator", [&] {
    auto sep = ck::separation_number_indicator(g);
    return json{{"value", sep.value},
                {"weighting", "indicator"},
                {"hardest_set", sep.hardest_set.ids()},
                {"hardest_separator", sep.hardest_separator.ids()}};
  });
  return report;
}

// ---------------------------------------------------------------------------
// sep

ck::WeightFunction read_weights(const ck::Graph& g, const std::string& path) {
  const std::string text = ck::corpus::read_file(path);
  std::vector<std::uint64_t> w(g.n(), 0);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long v = -1, weight = 0;
    std::string rest;
    if (!(ls >> v >> weight) || (ls >> rest)) throw ck::ParseError("weights: expected \"vertex weight\"", line_no, 0);
    if (weight < 0) throw UsageError("negative weight on line " + std::to_string(line_no));
    if (v < 0 || static_cast<std::size_t>(v) >= g.n()) throw ck::ParseError("weights: vertex out of range", line_no, 0);
    w[static_cast<std::size_t>(v)] = static_cast<std::uint64_t>(weight);
  }
  return ck::WeightFunction(std::move(w));
}

json witness_json(const ck::Graph& g, const ck::SeparatorWitness& w, const ck::WeightFunction& mu) {
  auto balance = ck::is_balanced(g, w.separator, mu);
  return {{"centres", w.centres.ids()},
          {"radius", w.radius},
          {"separator", w.separator.ids()},
          {"component_weights", balance.component_weights},
          {"heaviest_component_weight", w.heaviest_component_weight},
          {"total_weight", w.total_weight}};
}

// ---------------------------------------------------------------------------
// build

struct CoarseFlags {
  long long k = 1, t = 1, base = 4, cap = 2, z = 1;
  bool paper = false;
};

ck::ConstructionParams make_params(const CoarseFlags& f) {
  if (f.paper) return ck::ConstructionParams::paper(natural(f.k, "--k"), natural(f.t, "--t"));
  return ck::ConstructionParams::desk(natural(f.k, "--k"), natural(f.t, "--t"), natural(f.base, "--base"),
                                      natural(f.cap, "--cap"), natural(f.z, "--z"));
}

void add_coarse_flags(CLI::App* cmd, CoarseFlags& f) {
  cmd->add_option("--k", f.k, "centres per balanced separator")->capture_default_str();
  cmd->add_option("--t", f.t, "K_{t,t} parameter (enters the reported constant d only)")->capture_default_str();
  cmd->add_option("--base", f.base, "alpha threshold for the single-bag base case")->capture_default_str();
  cmd->add_option("--cap", f.cap, "independence number X is enlarged to")->capture_default_str();
  cmd->add_option("--z", f.z, "Z threshold denominator")->capture_default_str();
  cmd->add_flag("--paper", f.paper, "use the proof's own thresholds 20k, 20dk, 10dk");
}

int report_failure(const ck::HypothesisFailure& e) {
  json out = {{"status", "hypothesis-failure"},
              {"k", e.k()},
              {"radius", 1},
              {"host", e.host().ids()},
              {"weighted_set", e.weighted().ids()},
              {"message", e.what()}};
  std::cout << out.dump(2) << "\n";
  return kExitHypothesis;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{"coarsekit: centred sets, balanced separators and tree-decompositions"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
  std::string family, format = "graph6", out_path;
  std::vector<std::string> sizes;
  std::uint64_t seed = 0;
  gen_cmd->add_option("family", family, "path|cycle|complete|grid|biclique|random|tree|cactus|two-subdivision-of:<family>")
      ->required();
  gen_cmd->add_option("sizes", sizes, "size arguments of the family");
  gen_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  gen_cmd->add_option("--format", format, "graph6|edgelist")->check(CLI::IsMember({"graph6", "edgelist"}))->capture_default_str();
  gen_cmd->add_option("--out", out_path, "output file (default stdout)");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "report n, m, alpha, treewidth and indicator separation number");
  std::string graph_path;
  analyze_cmd->add_option("graph", graph_path, "graph file (graph6 or edge list)")->required();

  // sep
  auto* sep_cmd = app.add_subcommand("sep", "search (k,r)-centred balanced separators");
  long long sep_k = 1, sep_r = 1;
  std::string weights_path, indicator;
  bool all_indicators = false;
  sep_cmd->add_option("graph", graph_path, "graph file")->required();
  sep_cmd->add_option("--k", sep_k, "number of centres")->capture_default_str();
  sep_cmd->add_option("--r", sep_r, "ball radius")->capture_default_str();
  auto* w_opt = sep_cmd->add_option("--weights", weights_path, "file of \"vertex weight\" lines");
  auto* i_opt = sep_cmd->add_option("--indicator", indicator, "vertex list, \"all\" or \"branch-vertices\"");
  auto* a_opt = sep_cmd->add_flag("--all-indicators", all_indicators, "check every indicator weighting");
  w_opt->excludes(i_opt)->excludes(a_opt);
  i_opt->excludes(a_opt);

  // build
  auto* build_cmd = app.add_subcommand("build", "build a tree-decomposition document");
  std::string build_mode = "coarse", x_list;
  long long max_sep = -1;
  CoarseFlags flags;
  build_cmd->add_option("graph", graph_path, "graph file")->required();
  build_cmd->add_option("--mode", build_mode, "coarse|classic")->check(CLI::IsMember({"coarse", "classic"}))->capture_default_str();
  build_cmd->add_option("--x", x_list, "vertices whose closed neighbourhood must sit in one bag");
  build_cmd->add_option("--max-sep", max_sep, "classic: separator size (default: indicator separation number)");
  build_cmd->add_option("--out", out_path, "output file (default stdout)");
  build_cmd->add_option("--seed", seed, "recorded in provenance");
  add_coarse_flags(build_cmd, flags);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "re-check a decomposition document against a graph");
  std::string doc_path, checks_text;
  verify_cmd->add_option("graph", graph_path, "graph file")->required();
  verify_cmd->add_option("document", doc_path, "decomposition JSON")->required();
  verify_cmd->add_option("--check", checks_text, "comma list of valid,centred,hub (default: all that apply)");

  // lemma-suite
  auto* lemma_cmd = app.add_subcommand("lemma-suite", "exhaustive checks of the obstruction lemma and the sep/tw laws");
  std::string k_list = "1,2";
  long long law_n = 6;
  lemma_cmd->add_option("--k", k_list, "comma list of k values")->capture_default_str();
  lemma_cmd->add_option("--law-max-n", law_n, "law sweep over all labelled graphs up to this order (0 skips)")
      ->capture_default_str();

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "radius-1 versus radius-2 evidence table (CSV)");
  std::string corpus_dir, builtin;
  long long scan_k = 1;
  CoarseFlags scan_flags;
  auto* dir_opt = scan_cmd->add_option("--corpus", corpus_dir, "directory of graph files");
  auto* builtin_opt = scan_cmd->add_option("--builtin", builtin, "trees-cycles|empty");
  dir_opt->excludes(builtin_opt);
  scan_cmd->add_option("--out", out_path, "output file (default stdout)");
  add_coarse_flags(scan_cmd, scan_flags);
  scan_cmd->remove_option(scan_cmd->get_option("--k"));
  scan_cmd->add_option("--k", scan_k, "centres per separator")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*gen_cmd) {
    const ck::Graph g = generate(family, sizes, seed);
    emit(format == "graph6" ? ck::io::to_graph6(g) + "\n" : ck::io::to_edge_list(g), out_path);
    return kExitOk;
  }

  if (*analyze_cmd) {
    std::cout << analyze(load_graph(graph_path)).dump(2) << "\n";
    return kExitOk;
  }

  if (*sep_cmd) {
    const ck::Graph g = load_graph(graph_path);
    const std::size_t k = natural(sep_k, "--k"), r = natural(sep_r, "--r");
    if (all_indicators) {
      auto res = ck::admits_kr_balanced_separators_indicator(g, k, r);
      json out = {{"admits", res.admits}, {"k", k}, {"r", r}, {"weighting", "indicator"}, {"sets_checked", res.sets_checked}};
      out["failing_set"] = res.failing_set ? json(res.failing_set->ids()) : json(nullptr);
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }
    ck::WeightFunction mu = ck::WeightFunction::uniform(g.n());
    if (!weights_path.empty()) mu = read_weights(g, weights_path);
    if (*i_opt) mu = ck::WeightFunction::indicator(g.n(), parse_vertex_list(g, indicator));
    auto w = ck::find_centred_balanced_separator(g, mu, k, r);
    if (!w) {
      std::cout << "none\n";
      return kExitOk;
    }
    std::cout << witness_json(g, *w, mu).dump(2) << "\n";
    return kExitOk;
  }

  if (*build_cmd) {
    const ck::Graph g = load_graph(graph_path);
    ck::doc::Provenance prov{g_command_line, seed, false};
    if (build_mode == "classic") {
      std::size_t k = 0;
      if (max_sep >= 0) {
        k = static_cast<std::size_t>(max_sep);
      } else {
        k = std::max<std::size_t>(1, ck::separation_number_indicator(g).value);
      }
      auto res = ck::decomposition_from_separator_oracle(g, k);
      if (!res.decomposition) {
        json out = {{"status", "separator-oracle-failure"},
                    {"max_sep_size", k},
                    {"weighted_set", res.failing_set->ids()},
                    {"host", res.failing_part->ids()}};
        std::cout << out.dump(2) << "\n";
        return kExitHypothesis;
      }
      auto d = ck::doc::from_classic(g, res, prov);
      COARSEKIT_ASSERT(ck::doc::verify(g, d, ck::doc::kValid).empty(), "emitted document verifies");
      emit(ck::doc::to_json(d).dump(2) + "\n", out_path);
      return kExitOk;
    }
    const auto params = make_params(flags);
    const ck::VertexSet x = parse_vertex_list(g, x_list);
    try {
      auto cd = ck::build_coarse_decomposition(g, x, params);
      auto d = ck::doc::from_coarse(g, cd, params, prov);
      const auto reparsed = ck::doc::parse_document(json::parse(ck::doc::to_json(d).dump()));
      COARSEKIT_ASSERT(ck::doc::verify(g, reparsed, ck::doc::kValid | ck::doc::kCentred | ck::doc::kHub).empty(),
                       "emitted document verifies");
      emit(ck::doc::to_json(d).dump(2) + "\n", out_path);
    } catch (const ck::HypothesisFailure& e) {
      return report_failure(e);
    }
    return kExitOk;
  }

  if (*verify_cmd) {
    const ck::Graph g = load_graph(graph_path);
    json j;
    try {
      j = json::parse(ck::corpus::read_file(doc_path));
    } catch (const json::parse_error& e) {
      throw ck::doc::SchemaError(std::string("document is not JSON: ") + e.what());
    }
    const auto d = ck::doc::parse_document(j);
    unsigned checks = ck::doc::kValid;
    if (d.mode == "coarse") checks |= ck::doc::kCentred | ck::doc::kHub;
    if (!checks_text.empty()) {
      checks = 0;
      std::stringstream ss(checks_text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item == "valid") checks |= ck::doc::kValid;
        else if (item == "centred") checks |= ck::doc::kCentred;
        else if (item == "hub") checks |= ck::doc::kHub;
        else throw UsageError("unknown check " + item);
      }
    }
    const auto problems = ck::doc::verify(g, d, checks);
    for (const auto& p : problems) std::cout << p << "\n";
    if (problems.empty()) std::cout << "ok\n";
    return problems.empty() ? kExitOk : 1;
  }

  if (*lemma_cmd) {
    bool all_ok = true;
    for (std::size_t k : parse_list(k_list, "k")) {
      const auto rep = ck::verify_lemma_obsk2k(k);
      std::cout << "lemma k=" << k << ": K_" << 2 * k + 2 << "^(2) n=" << rep.n << ", " << rep.centre_sets_checked
                << " centre sets checked, " << rep.balanced_found << " balanced separators found"
                << ", min surviving branch vertices " << rep.min_surviving_branch
                << ", path-avoidance failures " << rep.path_avoidance_failures
                << ", control K_" << 2 * k + 2 << ": " << rep.control_balanced_found << " of "
                << rep.control_centre_sets << " balanced"
                << ", " << rep.seconds << " s: " << (rep.holds() ? "PASS" : "FAIL") << "\n";
      all_ok = all_ok && rep.holds();
    }
    if (law_n > 0) {
      const auto rep = ck::law_sweep(natural(law_n, "--law-max-n"));
      std::cout << "laws sep<=tw+1, tw<=4sep (indicator weightings): " << rep.graphs << " labelled graphs on <= "
                << rep.max_n << " vertices, " << rep.violations << " violations, " << rep.seconds << " s: "
                << (rep.violations == 0 ? "PASS" : "FAIL") << "\n";
      if (rep.first_violation) {
        std::cout << "counterexample " << ck::io::to_graph6(rep.first_violation->graph) << " (" << rep.first_violation->law
                  << ", tw=" << rep.first_violation->treewidth << ", sep=" << rep.first_violation->separation << ")\n";
        all_ok = false;
      }
    }
    return all_ok ? kExitOk : kExitInternal;
  }

  if (*scan_cmd) {
    std::vector<ck::NamedGraph> items;
    if (!corpus_dir.empty()) items = ck::corpus::load_directory(corpus_dir);
    else if (!builtin.empty()) items = ck::corpus::builtin(builtin);
    else throw UsageError("scan needs --corpus DIR or --builtin NAME");
    scan_flags.k = scan_k;
    const auto rows = ck::conjecture_scan(items, natural(scan_k, "--k"), make_params(scan_flags));
    emit(ck::to_csv(rows), out_path);
    return kExitOk;
  }
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) g_command_line += (i ? " " : "") + std::string(argv[i]);
  try {
    return run(argc, argv);
  } catch (const ck::HypothesisFailure& e) {
    return report_failure(e);
  } catch (const ck::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ck::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ck::ScaleError& e) {
    std::cerr << "scale limit: " << e.what() << "\n";
    return kExitInput;
  } catch (const ck::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
