#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

// {min(a,b), ..., max(a,b)}, ascending.
std::vector<std::int64_t> integer_interval(std::int64_t a, std::int64_t b);

// Resolving set of G + uv built from a resolving set W of G:
//   W' = W ∪ { x : d_G(w, x) ∈ I(d_G(w, u), d_G(w, v)) for some w ∈ W },
// with every distance taken in G (before the edge exists). W keeps its
// order; new members follow in label order.
// Throws NotResolving, EdgeExists, SelfLoop, Disconnected, UnknownVertex.
std::vector<VertexLabel> augment_addition(const Graph& g, std::span<const VertexLabel> witness,
                                          std::string_view u, std::string_view v);

// Resolving set of G - uv: W ∪ {u, v}, new members appended in label order.
// Throws NotResolving, EdgeMissing, DisconnectsGraph, UnknownVertex.
std::vector<VertexLabel> augment_removal(const Graph& g, std::span<const VertexLabel> witness,
                                         std::string_view u, std::string_view v);

enum class EditKind { kAdd, kRemove };

struct Edit {
  EditKind kind;
  VertexLabel u;
  VertexLabel v;

  bool operator==(const Edit&) const = default;
};

using EditSequence = std::vector<Edit>;

struct EditStep {
  Graph graph;
  std::vector<VertexLabel> witness;
};

// Element 0 is (G, W); element t is the graph after t edits with the
// witness carried forward by the matching augment step.
std::vector<EditStep> apply_edit_sequence(const Graph& g, std::span<const VertexLabel> witness,
                                          const EditSequence& edits);

std::string_view to_string(EditKind kind);

// "add u v" / "remove u v" per line; '#' comments and blank lines skipped.
// Throws Parse.
EditSequence parse_edit_sequence(std::string_view text);

}  // namespace metricdim
