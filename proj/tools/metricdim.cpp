// metricdim: command-line front end for the metric dimension toolkit.
//
// Exit codes: 0 ok, 1 verification false, 2 usage or input error,
// 3 search budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "metricdim/claims.hpp"
#include "metricdim/error.hpp"
#include "metricdim/families.hpp"
#include "metricdim/graph_io.hpp"
#include "metricdim/perturb.hpp"
#include "metricdim/resolving.hpp"
#include "metricdim/serialize.hpp"
#include "metricdim/ternary.hpp"

namespace md = metricdim;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw md::Error(md::ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

md::Graph read_graph(const std::string& path) { return md::parse_graph_text(read_input(path)); }

std::vector<md::VertexLabel> split_witness(const std::string& text) {
  std::vector<md::VertexLabel> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

json with_schema(json j) {
  j["schema"] = md::kSchema;
  return j;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void emit_graph(const md::Graph& g, const std::string& format, json extra = json::object()) {
  if (format == "dot") {
    md::write_dot(std::cout, g);
  } else if (format == "json") {
    json j = md::graph_to_json(g);
    for (auto& [key, value] : extra.items()) j[key] = value;
    print_json(j);
  } else {
    md::write_edge_list(std::cout, g);
  }
}

json pair_json(const std::optional<md::LabelPair>& pair) {
  if (!pair) return nullptr;
  return json::array({pair->first, pair->second});
}

int exit_code_for(const md::Error& e) {
  switch (e.code()) {
    case md::ErrorCode::kBudget:
    case md::ErrorCode::kExceeded:
    case md::ErrorCode::kTooLarge:
      return kExitBudget;
    case md::ErrorCode::kNotResolving:
      return kExitFalse;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric dimension toolkit"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  const std::vector<std::string> graph_formats{"edgelist", "dot", "json"};
  std::string result_format = "json";

  // gen -----------------------------------------------------------------
  std::string gen_kind;
  std::size_t gen_n = 5;
  double gen_p = 0.3;
  std::uint64_t gen_seed = md::kDefaultSeed;
  std::string gen_format = "edgelist";
  auto* gen = app.add_subcommand("gen", "Generate a standard graph");
  gen->add_option("kind", gen_kind, "path|cycle|complete|star|wheel|ladder|random")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "star", "wheel", "ladder", "random"}));
  gen->add_option("--n", gen_n, "Size parameter")->check(CLI::PositiveNumber);
  gen->add_option("--p", gen_p, "Extra-edge probability (random)")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "RNG seed (random)");
  gen->add_option("--format", gen_format)->check(CLI::IsMember(graph_formats));
  gen->callback([&] {
    md::Graph g;
    if (gen_kind == "path") g = md::path_graph(gen_n);
    else if (gen_kind == "cycle") g = md::cycle_graph(gen_n);
    else if (gen_kind == "complete") g = md::complete_graph(gen_n);
    else if (gen_kind == "star") g = md::star_graph(gen_n);
    else if (gen_kind == "wheel") g = md::wheel_graph(gen_n);
    else if (gen_kind == "ladder") g = md::ladder_graph(gen_n);
    else {
      std::mt19937_64 rng(gen_seed);
      g = md::random_connected_graph(gen_n, gen_p, rng);
    }
    emit_graph(g, gen_format);
  });

  // dim -----------------------------------------------------------------
  std::string dim_file = "-";
  std::optional<std::size_t> dim_max_k;
  std::optional<double> dim_budget;
  std::uint64_t dim_nodes = 0;
  unsigned dim_threads = 1;
  auto* dim = app.add_subcommand("dim", "Exact metric dimension");
  dim->add_option("graph", dim_file, "Graph file (edge list or JSON), '-' for stdin");
  dim->add_option("--max-k", dim_max_k, "Largest set size to try");
  dim->add_option("--budget", dim_budget, "Wall-clock limit in seconds")->check(CLI::NonNegativeNumber);
  dim->add_option("--node-budget", dim_nodes, "Search node limit, 0 for none");
  dim->add_option("--threads", dim_threads)->check(CLI::PositiveNumber);
  dim->add_option("--format", result_format, "json only")
      ->check(CLI::IsMember({"json"}));
  dim->callback([&] {
    md::ExactOptions options;
    options.max_k = dim_max_k;
    options.node_budget = dim_nodes;
    options.threads = dim_threads;
    if (dim_budget) {
      options.deadline = std::chrono::steady_clock::now() +
                         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(*dim_budget));
    }
    print_json(md::to_json(md::metric_dimension_exact(read_graph(dim_file), options)));
  });

  // check ---------------------------------------------------------------
  std::string check_file = "-";
  std::string check_witness;
  auto* check = app.add_subcommand("check", "Test whether a vertex set resolves a graph");
  check->add_option("graph", check_file, "Graph file, '-' for stdin");
  check->add_option("--witness", check_witness, "Comma-separated labels")->required();
  check->add_option("--format", result_format, "json only")
      ->check(CLI::IsMember({"json"}));
  check->callback([&] {
    md::Graph g = read_graph(check_file);
    auto w = split_witness(check_witness);
    auto pair = md::find_unresolved_pair(g, w);
    print_json(with_schema({{"resolving", !pair}, {"witness", w}, {"unresolved_pair", pair_json(pair)}}));
    if (pair) exit_code = kExitFalse;
  });

  // perturb -------------------------------------------------------------
  std::string perturb_file = "-";
  std::string perturb_witness;
  std::string perturb_edits;
  auto* perturb = app.add_subcommand("perturb", "Carry a resolving set through edge edits");
  perturb->add_option("graph", perturb_file, "Graph file, '-' for stdin");
  perturb->add_option("--witness", perturb_witness, "Comma-separated labels")->required();
  perturb->add_option("--edits", perturb_edits, "File of 'add u v' / 'remove u v' lines")
      ->required();
  perturb->add_option("--format", result_format, "json only")
      ->check(CLI::IsMember({"json"}));
  perturb->callback([&] {
    md::Graph g = read_graph(perturb_file);
    auto edits = md::parse_edit_sequence(read_input(perturb_edits));
    auto steps = md::apply_edit_sequence(g, split_witness(perturb_witness), edits);
    json trace = json::array();
    bool all_ok = true;
    for (std::size_t t = 1; t < steps.size(); ++t) {
      bool ok = md::is_resolving(steps[t].graph, steps[t].witness);
      all_ok = all_ok && ok;
      trace.push_back({{"op", md::to_string(edits[t - 1].kind)},
                       {"u", edits[t - 1].u},
                       {"v", edits[t - 1].v},
                       {"witness", steps[t].witness},
                       {"witness_size", steps[t].witness.size()},
                       {"verified", ok}});
    }
    print_json(with_schema({{"initial_witness", steps.front().witness}, {"steps", trace}}));
    if (!all_ok) exit_code = kExitFalse;
  });

  // family --------------------------------------------------------------
  std::string family_format = "edgelist";
  auto* family = app.add_subcommand("family", "Build a graph from one of the constructions");
  family->require_subcommand(1);
  family->add_option("--format", family_format)->check(CLI::IsMember(graph_formats));

  md::StripSpec strip_spec;
  auto* strip = family->add_subcommand("strip", "Two-row strip window");
  strip->add_option("--i", strip_spec.i, "Strip width")->check(CLI::NonNegativeNumber);
  strip->add_flag("--primed", strip_spec.primed, "Add the cross edges");
  strip->add_option("--cols", strip_spec.n_cols, "Number of columns");
  strip->callback([&] {
    json extra;
    if (strip_spec.primed && strip_spec.i > 0) {
      extra["canonical_witness"] = md::labels_of(md::strip_canonical_set(strip_spec.i));
    }
    emit_graph(md::strip_graph(strip_spec), family_format, extra);
  });

  std::size_t nb_d = 2;
  std::string nb_strings;
  auto* nonbinary = family->add_subcommand("nonbinary", "Pages, ramps and digits");
  nonbinary->add_option("--d", nb_d, "String length")->check(CLI::PositiveNumber);
  nonbinary->add_option("--strings", nb_strings,
                        "File with one ternary string per line (default: canonical set)");
  nonbinary->callback([&] {
    md::NonbinarySpec spec = md::NonbinarySpec::canonical(nb_d);
    if (!nb_strings.empty()) {
      spec.strings.clear();
      std::stringstream in(read_input(nb_strings));
      std::string line;
      while (in >> line) spec.strings.push_back(md::TernaryString::parse(line));
    }
    auto nb = md::nonbinary_graph(spec);
    emit_graph(nb.graph, family_format,
               {{"witness", nb.witness},
                {"critical_edge", {nb.critical_edge.first, nb.critical_edge.second}},
                {"page_tips", nb.page_tips}});
  });

  md::KiteSpec kite_spec;
  auto* kite = family->add_subcommand("kite", "Kite with branches joined at u and v");
  kite->add_option("--branches", kite_spec.branches)->check(CLI::Range(2, 1000));
  kite->add_option("--tail-len", kite_spec.tail_len)->check(CLI::Range(1, 1000));
  kite->callback([&] {
    auto k = md::kite_graph(kite_spec);
    emit_graph(k.graph, family_format,
               {{"suggested_witness", k.suggested_witness},
                {"critical_edge", {k.critical_edge.first, k.critical_edge.second}},
                {"tips", k.tips}});
  });

  std::string tail_base;
  std::string tail_attach;
  std::size_t tail_len = 1;
  auto* tail = family->add_subcommand("tail", "Attach a pendant path to a graph");
  tail->add_option("--base", tail_base, "Base graph file")->required();
  tail->add_option("--attach", tail_attach, "Attachment vertex")->required();
  tail->add_option("--len", tail_len, "Tail length")->check(CLI::PositiveNumber);
  tail->callback([&] {
    emit_graph(md::tail_graph({read_graph(tail_base), tail_attach, tail_len}), family_format);
  });

  // ternary -------------------------------------------------------------
  auto* ternary = app.add_subcommand("ternary", "Conflict-free ternary string sets");
  ternary->require_subcommand(1);
  std::size_t tern_n = 2;
  auto str_list = [](const std::vector<md::TernaryString>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
  };
  auto* canonical = ternary->add_subcommand("canonical", "Strings with at most one 2");
  canonical->add_option("--n", tern_n)->check(CLI::Range(1, 20));
  canonical->callback([&] {
    auto s = md::canonical_conflict_free(tern_n);
    print_json(with_schema({{"n", tern_n}, {"size", s.size()}, {"strings", str_list(s)}}));
  });
  auto* maximum = ternary->add_subcommand("max", "Exhaustive largest conflict-free subset");
  maximum->add_option("--n", tern_n)->check(CLI::PositiveNumber);
  maximum->callback([&] {
    auto best = md::max_conflict_free_bruteforce(tern_n);
    print_json(with_schema({{"n", tern_n}, {"size", best.size}, {"strings", str_list(best.witness)}}));
  });
  std::string tern_file = "-";
  auto* tcheck = ternary->add_subcommand("check", "Test a set of strings for conflicts");
  tcheck->add_option("file", tern_file, "One string per line, '-' for stdin");
  tcheck->callback([&] {
    std::vector<md::TernaryString> strings;
    std::stringstream in(read_input(tern_file));
    std::string line;
    while (in >> line) strings.push_back(md::TernaryString::parse(line));
    auto pair = md::find_conflict(strings);
    json conflict = nullptr;
    if (pair) conflict = json::array({pair->first.str(), pair->second.str()});
    print_json(with_schema({{"conflict_free", !pair}, {"conflict", conflict}}));
    if (pair) exit_code = kExitFalse;
  });

  // verify --------------------------------------------------------------
  md::VerifyOptions verify_options;
  double verify_budget = 600;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Run the claim verification suite");
  verify->add_option("--filter", verify_options.filter, "Claim id prefix");
  verify->add_option("--budget", verify_budget, "Seconds")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", verify_options.seed);
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  verify->callback([&] {
    verify_options.budget = std::chrono::duration<double>(verify_budget);
    auto reports = md::run_verify_suite(verify_options);
    bool failed = false;
    json all = json::array();
    for (const auto& r : reports) {
      failed = failed || r.status == md::ClaimStatus::kFail;
      if (verify_format == "json") {
        all.push_back(md::to_json(r));
      } else {
        std::cout << md::to_string(r.status) << "  " << r.claim_id << "  ("
                  << r.elapsed.count() << " s)  " << r.details << '\n';
      }
    }
    if (verify_format == "json") print_json(with_schema({{"reports", all}}));
    if (failed) exit_code = kExitFalse;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const md::Error& e) {
    std::cerr << "metricdim: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "metricdim: " << e.what() << '\n';
    return kExitUsage;
  }
  return exit_code;
}
