#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "metricdim/graph.hpp"

namespace metricdim {

// Edge-list text: one edge per line as two whitespace-separated labels.
// Lines starting with '#' and blank lines are ignored. A line holding a
// single label declares an isolated vertex. Throws Parse, SelfLoop,
// InvalidLabel.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// Sorted output: edges by (smaller label, larger label), isolated vertices
// after the edges. parse_edge_list(format_edge_list(g)) == g.
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

// Undirected DOT. Vertices sorted, each edge with the smaller endpoint first.
void write_dot(std::ostream& out, const Graph& g, std::string_view name = "G");
std::string format_dot(const Graph& g, std::string_view name = "G");

}  // namespace metricdim
