#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "metricdim/graph.hpp"
#include "metricdim/ternary.hpp"

namespace metricdim {

// ---------------------------------------------------------------------------
// Two-row strip graphs. Vertex (column a, side b) is labelled "v<a>_<b>".
// Unprimed: v_ab ~ v_cd whenever |a - c| <= i. Primed adds the cross edges
// with |a - c| = i + 1 and b != d. Finite windows keep columns 0..n_cols-1.

struct StripVertex {
  std::size_t column = 0;
  int side = 0;

  std::string label() const;
  // Throws InvalidLabel for anything not of the form v<a>_<b>.
  static StripVertex parse(std::string_view label);
  auto operator<=>(const StripVertex&) const = default;
};

struct StripSpec {
  std::size_t i = 1;
  bool primed = false;
  std::size_t n_cols = 2;
};

// Throws WindowTooSmall (n_cols < 2).
Graph strip_graph(const StripSpec& spec);

// Distance between vertices k columns apart on the same side (alpha) or on
// opposite sides (beta) of the primed strip of width i.
std::uint64_t strip_alpha(std::uint64_t i, std::uint64_t k);
std::uint64_t strip_beta(std::uint64_t i, std::uint64_t k);

// (v_0,0, v_1,0, ..., v_i,0, v_0,1, ..., v_{i-1},1): the vertices with a + b <= i.
std::vector<StripVertex> strip_canonical_set(std::size_t i);

// With k = 1 + max column in W, the pair (v_k,0, v_k,1) that W cannot
// separate in the unprimed strip. Throws EmptyWitness.
std::pair<StripVertex, StripVertex> strip_unresolved_pair(std::span<const StripVertex> witness);

std::vector<VertexLabel> labels_of(std::span<const StripVertex> vertices);

// ---------------------------------------------------------------------------
// Kite: hub u joined to the head of each branch; the head splits into two
// parallel vertices (d0 filled, d1 hollow) that rejoin at a merge vertex,
// followed by a path of tail_len edges ending at a_j; every a_j is joined
// to hub v. The interesting non-edge is (u, v).
//
// Labels: "u", "v", "k<j>_head", "k<j>_d0", "k<j>_d1", "k<j>_merge",
// "k<j>_t<s>" for 1 <= s < tail_len, and "a<j>", with j = 1..branches.

struct KiteSpec {
  std::size_t branches = 5;
  std::size_t tail_len = 4;
};

struct KiteGraph {
  Graph graph;
  std::vector<VertexLabel> suggested_witness;  // every k<j>_d0
  LabelPair critical_edge;                     // (u, v)
  std::vector<VertexLabel> tips;               // a_1..a_m
};

// Throws InvalidArgument (branches < 2 or tail_len < 1).
KiteGraph kite_graph(const KiteSpec& spec);

// ---------------------------------------------------------------------------
// Pages, ramps and digits. For each string x of length d there is a page
// a<x> - p<x>_1 - p<x>_2 - p<x>_3 - b<x>; "w0" is joined to every a<x>;
// b<x> reaches digit "w<j>" directly when x(j) = 1 and through the ramp
// midpoint "r<x>_<j>" when x(j) = 2; "c" is joined to w1..wd. Digit
// positions j are 1-based.

struct NonbinarySpec {
  std::size_t d = 2;
  std::vector<TernaryString> strings;

  // All strings with at most one 2.
  static NonbinarySpec canonical(std::size_t d);
};

struct NonbinaryGraph {
  Graph graph;
  std::vector<VertexLabel> witness;              // w0, w1, ..., wd
  LabelPair critical_edge;                       // (c, w0)
  std::vector<std::vector<VertexLabel>> pages;   // in string order
  std::vector<VertexLabel> page_tips;            // a<x>, in string order
  struct Ramp {
    VertexLabel midpoint;
    std::size_t digit;  // 1-based
    TernaryString string;
  };
  std::vector<Ramp> ramps;
};

// Throws ConflictingStrings, LengthMismatch, InvalidArgument.
NonbinaryGraph nonbinary_graph(const NonbinarySpec& spec);

// Predicted distances from a ramp midpoint (ramp of digit `digit`, page
// string x) to w1..wd: 1 at the ramp's own digit, 2 where x has a 1, 3
// elsewhere. `digit` is 1-based. Throws NotARamp, InvalidArgument.
std::vector<std::uint32_t> ramp_midpoint_code(std::size_t d, std::size_t digit,
                                              const TernaryString& x);

namespace detail {
// Same construction without the conflict-free check. Test use only.
NonbinaryGraph nonbinary_graph_unchecked(const NonbinarySpec& spec);
}  // namespace detail

// ---------------------------------------------------------------------------
// Base graph with a pendant path attach - tail_1 - ... - tail_<length>.

struct TailSpec {
  Graph base;
  VertexLabel attach;
  std::size_t length = 1;
};

// Throws UnknownVertex, LabelCollision, InvalidArgument (length 0).
Graph tail_graph(const TailSpec& spec);
std::string tail_label(std::size_t s);

// ---------------------------------------------------------------------------
// Small standard graphs, vertices labelled "0".."n-1".

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // centre "0"
Graph wheel_graph(std::size_t rim);    // hub "0"
// P_n x K_2 on the strip labels: rungs v<a>_0 - v<a>_1 and rails along each
// side. strip_graph({0, true, n}) is the same graph with the sides of every
// odd column swapped.
Graph ladder_graph(std::size_t n);

// Random recursive tree on shuffled labels plus each remaining pair with
// probability p. Always connected.
Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace metricdim
