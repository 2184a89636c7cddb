#include "metricdim/perturb.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "metricdim/resolving.hpp"

namespace metricdim {

std::vector<std::int64_t> integer_interval(std::int64_t a, std::int64_t b) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = std::min(a, b); x <= std::max(a, b); ++x) out.push_back(x);
  return out;
}

namespace {

void require_resolving(const Graph& g, std::span<const VertexLabel> witness) {
  if (auto pair = find_unresolved_pair(g, witness)) {
    throw Error(ErrorCode::kNotResolving,
                "witness does not separate " + pair->first + " and " + pair->second);
  }
}

// W followed by the sorted members of `extra` not already in W.
std::vector<VertexLabel> extend(std::span<const VertexLabel> witness,
                                const std::set<VertexLabel>& extra) {
  std::vector<VertexLabel> out(witness.begin(), witness.end());
  std::set<VertexLabel> present(witness.begin(), witness.end());
  for (const auto& x : extra) {
    if (!present.contains(x)) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<VertexLabel> augment_addition(const Graph& g, std::span<const VertexLabel> witness,
                                          std::string_view u, std::string_view v) {
  VertexId a = g.id(u);
  VertexId b = g.id(v);
  if (a == b) throw Error(ErrorCode::kSelfLoop, "self-loop at '" + std::string(u) + "'");
  if (g.has_edge(a, b)) {
    throw Error(ErrorCode::kEdgeExists,
                "edge " + std::string(u) + "-" + std::string(v) + " already present");
  }
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  require_resolving(g, witness);

  std::set<VertexLabel> extra;
  for (const auto& w : witness) {
    DistanceMap from_w = bfs_distances(g, w);
    std::uint32_t lo = std::min(from_w[a].value(), from_w[b].value());
    std::uint32_t hi = std::max(from_w[a].value(), from_w[b].value());
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      std::uint32_t d = from_w[x].value();
      if (lo <= d && d <= hi) extra.insert(g.label(x));
    }
  }
  return extend(witness, extra);
}

std::vector<VertexLabel> augment_removal(const Graph& g, std::span<const VertexLabel> witness,
                                         std::string_view u, std::string_view v) {
  Graph edited = remove_edge(g, u, v);
  require_resolving(g, witness);
  if (!is_connected(edited)) {
    throw Error(ErrorCode::kDisconnectsGraph,
                "removing " + std::string(u) + "-" + std::string(v) + " disconnects the graph");
  }
  return extend(witness, {std::string(u), std::string(v)});
}

std::vector<EditStep> apply_edit_sequence(const Graph& g, std::span<const VertexLabel> witness,
                                          const EditSequence& edits) {
  std::vector<EditStep> steps;
  steps.push_back({g, std::vector<VertexLabel>(witness.begin(), witness.end())});
  for (const auto& edit : edits) {
    const EditStep& prev = steps.back();
    if (edit.kind == EditKind::kAdd) {
      auto w = augment_addition(prev.graph, prev.witness, edit.u, edit.v);
      steps.push_back({add_edge(prev.graph, edit.u, edit.v), std::move(w)});
    } else {
      auto w = augment_removal(prev.graph, prev.witness, edit.u, edit.v);
      steps.push_back({remove_edge(prev.graph, edit.u, edit.v), std::move(w)});
    }
  }
  return steps;
}

std::string_view to_string(EditKind kind) { return kind == EditKind::kAdd ? "add" : "remove"; }

EditSequence parse_edit_sequence(std::string_view text) {
  EditSequence out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 3 || (tokens[0] != "add" && tokens[0] != "remove")) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": expected 'add|remove <u> <v>'");
    }
    out.push_back({tokens[0] == "add" ? EditKind::kAdd : EditKind::kRemove, tokens[1], tokens[2]});
  }
  return out;
}

}  // namespace metricdim
