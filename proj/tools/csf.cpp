// csf: compute, convert, verify, and search commands over graph files and
// generated corpora.  Output is machine-first JSON lines; --pretty renders
// coefficient tables.  Exit codes: 0 ok, 1 verification failure, 2 usage/parse.

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csf/corpus.hpp"
#include "csf/csf_engine.hpp"
#include "csf/json_io.hpp"
#include "csf/qpoly.hpp"
#include "csf/verifiers.hpp"

using namespace csf;

namespace {

LoadedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return graph_from_json(json::parse(in));
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

void print_pretty(const SymFunc& f) {
  std::cout << "degree " << f.degree << ", basis " << basis_char(f.basis) << "\n";
  if (f.coeffs.empty()) {
    std::cout << "  0\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [lam, c] : f.coeffs) width = std::max(width, rational_str(c).size());
  for (const auto& [lam, c] : f.coeffs) {
    std::string cs = rational_str(c);
    std::cout << "  " << std::string(width - cs.size(), ' ') << cs << "  "
              << basis_char(f.basis) << "(";
    for (std::size_t i = 0; i < lam.parts.size(); ++i)
      std::cout << (i ? "," : "") << lam.parts[i];
    std::cout << ")\n";
  }
}

struct VerifyStats {
  long instances = 0;
  long failures = 0;
};

void emit(const VerificationReport& r, VerifyStats& s) {
  ++s.instances;
  if (!r.pass) ++s.failures;
  std::cout << report_to_json(r).dump() << "\n";
}

// Exhaustive labeled corpus (optionally plus the multigraph family), or a
// seeded random sample of `count` canonically distinct graphs.
void corpus_graphs(int n, int maxw, std::uint64_t seed, int count, bool with_multigraphs,
                   const std::function<void(const VertexWeightedGraph&)>& visit) {
  if (count <= 0) {
    CorpusSpec spec;
    spec.max_n = n;
    spec.max_weight = maxw;
    for_each_graph(spec, visit);
    if (with_multigraphs)
      for (const auto& g : multigraph_family()) visit(g);
    return;
  }
  std::mt19937_64 rng(seed);
  std::set<std::string> seen;
  long made = 0, attempts = 0, limit = 200L * count + 1000;
  while (made < count && attempts++ < limit) {
    int nn = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<int> weights(nn);
    for (int& w : weights) w = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(maxw));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nn; ++i)
      for (int j = i + 1; j < nn; ++j)
        if (rng() & 1) edges.push_back({i, j});
    VertexWeightedGraph g = make_graph_n(weights, edges);
    auto key = canonical_key(g);
    if (key && !seen.insert(*key).second) continue;
    ++made;
    visit(g);
  }
}

VerificationReport engines_report(const VertexWeightedGraph& g) {
  VerificationReport r;
  r.check = "engines";
  r.instance = json{{"graph", graph_to_json(g)}};
  auto rs = csf_all_engines(g);
  r.pass = engines_agree(rs);
  if (!r.pass) {
    json w = json::array();
    for (const auto& cr : rs)
      w.push_back(json{{"engine", engine_name(cr.provenance)},
                       {"fingerprint", cr.fingerprint},
                       {"value", symfunc_to_json(cr.value)}});
    r.witness = json{{"engines", w}};
  } else {
    r.note = "fingerprint " + rs[0].fingerprint;
  }
  return r;
}

// All orientations x all edges of g, flip relation at k = total weight.
VerificationReport flip_report(const VertexWeightedGraph& g) {
  VerificationReport r;
  r.check = "flip";
  int k = g.total_weight();
  r.instance = json{{"graph", graph_to_json(g)}, {"k", k}};
  r.pass = true;
  if (g.edges.size() > 16) throw std::invalid_argument("flip sweep: more than 16 edges");
  long checked = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << g.edges.size()); ++mask) {
    Orientation o = orient_from_mask(g, mask);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      FlipCheck fc = verify_flip_relation(o, e, k);
      ++checked;
      if (!fc.pass) {
        r.pass = false;
        r.witness = json{{"orientation_mask", mask},
                         {"edge", e},
                         {"lhs", qpoly_to_json(fc.lhs)},
                         {"rhs", qpoly_to_json(fc.rhs)}};
        return r;
      }
    }
  }
  r.note = std::to_string(checked) + " (orientation, edge) pairs checked";
  return r;
}

int run_verify(const std::string& check, int n, int maxw, std::uint64_t seed, int count) {
  static const std::set<std::string> known{"fig1",    "engines", "involution", "ppositivity",
                                           "cycle",   "sink",    "stanley",    "hook",
                                           "epositivity", "flip", "all"};
  if (!known.count(check)) {
    std::cerr << "unknown check '" << check << "'\n";
    return 2;
  }
  auto want = [&](const std::string& name) { return check == "all" || check == name; };
  VerifyStats stats;

  if (want("fig1")) emit(verify_fig_pair(), stats);

  if (want("engines"))
    corpus_graphs(n, maxw, seed, count, true,
                  [&](const VertexWeightedGraph& g) { emit(engines_report(g), stats); });

  if (want("involution"))
    corpus_graphs(n, maxw, seed, count, true,
                  [&](const VertexWeightedGraph& g) { emit(verify_involution(g), stats); });

  if (want("ppositivity"))
    corpus_graphs(n, maxw, seed, count, true,
                  [&](const VertexWeightedGraph& g) { emit(verify_p_positivity(g), stats); });

  if (want("cycle"))
    corpus_graphs(n, maxw, seed, count, true, [&](const VertexWeightedGraph& g) {
      for (const auto& c : enumerate_cycles(g)) emit(verify_cycle_relation(g, c, c[0]), stats);
    });

  if (want("sink"))
    corpus_graphs(n, maxw, seed, count, true, [&](const VertexWeightedGraph& g) {
      for (int m = 1; m <= g.total_weight(); ++m) emit(verify_sink_theorem(g, m), stats);
    });

  if (want("stanley"))
    corpus_graphs(n, 1, seed, count, false,
                  [&](const VertexWeightedGraph& g) { emit(verify_stanley_sinks(g), stats); });

  if (want("hook"))
    corpus_graphs(n, 1, seed, count, false, [&](const VertexWeightedGraph& g) {
      if (is_connected(g)) emit(verify_hook_coefficient(g), stats);
    });

  if (want("epositivity"))
    corpus_graphs(n, maxw, seed, count, true,
                  [&](const VertexWeightedGraph& g) { emit(check_e_positivity(g), stats); });

  if (want("flip")) {
    corpus_graphs(n, 1, seed, count, false,
                  [&](const VertexWeightedGraph& g) { emit(flip_report(g), stats); });
    if (count <= 0)
      for (const auto& g : multigraph_family()) emit(flip_report(g), stats);
  }

  std::cout << json{{"summary", json{{"check", check},
                                     {"instances", stats.instances},
                                     {"failures", stats.failures}}}}
                   .dump()
            << "\n";
  return stats.failures == 0 ? 0 : 1;
}

int run_search_trees(int n, int maxw) {
  if (n < 2 || n > 6) {
    std::cerr << "search-trees: --n must be between 2 and 6\n";
    return 2;
  }
  auto classes = find_equal_tree_classes(n, maxw);
  long cross = 0;
  for (const auto& c : classes) {
    json members = json::array();
    for (const auto& m : c.members)
      members.push_back(json{{"graph", graph_to_json(m.graph)},
                             {"canonical_key_hash", fnv1a(m.key)},
                             {"shape_key_hash", fnv1a(m.shape_key)}});
    if (c.crosses_shapes) ++cross;
    std::cout << json{{"fingerprint", c.fingerprint},
                      {"value", symfunc_to_json(c.value)},
                      {"members", members},
                      {"crosses_shapes", c.crosses_shapes}}
                     .dump()
              << "\n";
  }
  std::cout << json{{"summary", json{{"n", n},
                                     {"max_weight", maxw},
                                     {"classes", classes.size()},
                                     {"cross_shape_classes", cross}}}}
                   .dump()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chromatic symmetric functions of vertex-weighted multigraphs"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute the CSF of a graph file");
  std::string compute_file, engine = "all", compute_basis = "p";
  bool pretty = false;
  compute->add_option("file", compute_file, "graph JSON file")->required();
  compute->add_option("--engine", engine, "stable|subsets|delcon|all (default all)")
      ->check(CLI::IsMember({"all", "stable", "subsets", "delcon"}));
  compute->add_option("--basis", compute_basis, "m|p|e|h|s (default p)")
      ->check(CLI::IsMember({"m", "p", "e", "h", "s"}));
  compute->add_flag("--pretty", pretty, "aligned coefficient table instead of JSON");

  auto* convert_cmd = app.add_subcommand("convert", "re-expand a symmetric function");
  std::string convert_file, convert_basis;
  convert_cmd->add_option("file", convert_file, "symmetric function JSON file")->required();
  convert_cmd->add_option("--basis", convert_basis, "target basis m|p|e|h|s")
      ->required()
      ->check(CLI::IsMember({"m", "p", "e", "h", "s"}));

  auto* verify = app.add_subcommand("verify", "run a named check over a corpus");
  std::string check;
  int vn = 3, vmaxw = 2, vcount = 0;
  std::uint64_t vseed = 0;
  verify->add_option("check", check,
                     "fig1|engines|involution|ppositivity|cycle|sink|stanley|hook|"
                     "epositivity|flip|all")
      ->required();
  verify->add_option("--n", vn, "max vertex count (default 3)");
  verify->add_option("--maxw", vmaxw, "max vertex weight (default 2)");
  verify->add_option("--seed", vseed, "seed for random sampling mode");
  verify->add_option("--count", vcount, "sample this many distinct graphs instead of exhausting");

  auto* search = app.add_subcommand("search-trees", "find weighted trees with equal functions");
  int sn = 5, smaxw = 3;
  std::uint64_t sseed = 0;
  search->add_option("--n", sn, "tree size (2..6)")->required();
  search->add_option("--maxw", smaxw, "max vertex weight")->required();
  search->add_option("--seed", sseed, "reserved; enumeration is exhaustive and deterministic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(compute)) {
      LoadedGraph lg = load_graph_file(compute_file);
      SymFunc x;
      if (engine == "all") {
        auto rs = csf_all_engines(lg.g);
        if (!engines_agree(rs)) {
          std::cerr << "engine disagreement:\n";
          for (const auto& cr : rs)
            std::cerr << "  " << engine_name(cr.provenance) << " " << cr.fingerprint << " "
                      << symfunc_to_json(cr.value).dump() << "\n";
          return 1;
        }
        x = rs[0].value;
      } else {
        Engine e = engine == "stable" ? Engine::Stable
                 : engine == "subsets" ? Engine::Subsets
                                       : Engine::DelCon;
        x = csf::csf(lg.g, e).value;
      }
      SymFunc out = convert(x, basis_from_char(compute_basis[0]));
      if (pretty)
        print_pretty(out);
      else
        std::cout << symfunc_to_json(out).dump() << "\n";
      return 0;
    }
    if (app.got_subcommand(convert_cmd)) {
      std::ifstream in(convert_file);
      if (!in) throw std::runtime_error("cannot open " + convert_file);
      SymFunc f = symfunc_from_json(json::parse(in));
      std::cout << symfunc_to_json(convert(f, basis_from_char(convert_basis[0]))).dump() << "\n";
      return 0;
    }
    if (app.got_subcommand(verify)) return run_verify(check, vn, vmaxw, vseed, vcount);
    if (app.got_subcommand(search)) return run_search_trees(sn, smaxw);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
