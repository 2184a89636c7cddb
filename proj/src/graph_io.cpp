#include "metricdim/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace metricdim {

Graph read_edge_list(std::istream& in) {
  std::vector<VertexLabel> isolated;
  std::vector<LabelPair> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() == 1) {
      isolated.push_back(tokens[0]);
    } else if (tokens.size() == 2) {
      edges.emplace_back(tokens[0], tokens[1]);
    } else {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": expected 1 or 2 labels, got " +
                      std::to_string(tokens.size()));
    }
  }
  return build_graph(isolated, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.labeled_edges()) out << u << ' ' << v << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out << g.label(v) << '\n';
  }
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

namespace {

std::string dot_id(std::string_view label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void write_dot(std::ostream& out, const Graph& g, std::string_view name) {
  out << "graph " << dot_id(name) << " {\n";
  for (const auto& label : g.labels()) out << "  " << dot_id(label) << ";\n";
  for (const auto& [u, v] : g.labeled_edges()) {
    out << "  " << dot_id(u) << " -- " << dot_id(v) << ";\n";
  }
  out << "}\n";
}

std::string format_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  write_dot(out, g, name);
  return out.str();
}

}  // namespace metricdim
