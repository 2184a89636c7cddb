#include "metricdim/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace metricdim {

std::string StripVertex::label() const {
  return "v" + std::to_string(column) + "_" + std::to_string(side);
}

StripVertex StripVertex::parse(std::string_view label) {
  auto fail = [&] {
    return Error(ErrorCode::kInvalidLabel, "not a strip label: '" + std::string(label) + "'");
  };
  if (label.size() < 4 || label.front() != 'v') throw fail();
  auto sep = label.find('_');
  if (sep == std::string_view::npos || sep + 2 != label.size()) throw fail();
  StripVertex out;
  auto digits = label.substr(1, sep - 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out.column);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) throw fail();
  char side = label.back();
  if (side != '0' && side != '1') throw fail();
  out.side = side - '0';
  return out;
}

Graph strip_graph(const StripSpec& spec) {
  if (spec.n_cols < 2) {
    throw Error(ErrorCode::kWindowTooSmall, "strip window needs at least 2 columns");
  }
  std::vector<LabelPair> edges;
  for (std::size_t a = 0; a < spec.n_cols; ++a) {
    edges.emplace_back(StripVertex{a, 0}.label(), StripVertex{a, 1}.label());
    for (std::size_t c = a + 1; c <= a + spec.i && c < spec.n_cols; ++c) {
      for (int b = 0; b < 2; ++b) {
        for (int d = 0; d < 2; ++d) {
          edges.emplace_back(StripVertex{a, b}.label(), StripVertex{c, d}.label());
        }
      }
    }
    if (spec.primed && a + spec.i + 1 < spec.n_cols) {
      std::size_t c = a + spec.i + 1;
      edges.emplace_back(StripVertex{a, 0}.label(), StripVertex{c, 1}.label());
      edges.emplace_back(StripVertex{a, 1}.label(), StripVertex{c, 0}.label());
    }
  }
  return build_graph(edges);
}

namespace {

void require_width(std::uint64_t i) {
  if (i == 0) throw Error(ErrorCode::kInvalidArgument, "strip width must be at least 1");
}

}  // namespace

std::uint64_t strip_alpha(std::uint64_t i, std::uint64_t k) {
  require_width(i);
  std::uint64_t q = (k + i) / (i + 1);
  bool odd_multiple = k % (i + 1) == 0 && (k / (i + 1)) % 2 == 1;
  return q + (odd_multiple ? 1 : 0);
}

std::uint64_t strip_beta(std::uint64_t i, std::uint64_t k) {
  require_width(i);
  std::uint64_t q = (k + i) / (i + 1);
  bool even_multiple = k % (i + 1) == 0 && (k / (i + 1)) % 2 == 0;
  return q + (even_multiple ? 1 : 0);
}

std::vector<StripVertex> strip_canonical_set(std::size_t i) {
  if (i == 0) throw Error(ErrorCode::kInvalidArgument, "strip width must be at least 1");
  std::vector<StripVertex> out;
  for (std::size_t a = 0; a <= i; ++a) out.push_back({a, 0});
  for (std::size_t a = 0; a < i; ++a) out.push_back({a, 1});
  return out;
}

std::pair<StripVertex, StripVertex> strip_unresolved_pair(std::span<const StripVertex> witness) {
  if (witness.empty()) throw Error(ErrorCode::kEmptyWitness, "witness set is empty");
  std::size_t k = 0;
  for (const auto& w : witness) k = std::max(k, w.column);
  ++k;
  return {StripVertex{k, 0}, StripVertex{k, 1}};
}

std::vector<VertexLabel> labels_of(std::span<const StripVertex> vertices) {
  std::vector<VertexLabel> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(v.label());
  return out;
}

KiteGraph kite_graph(const KiteSpec& spec) {
  if (spec.branches < 2) throw Error(ErrorCode::kInvalidArgument, "kite needs >= 2 branches");
  if (spec.tail_len < 1) throw Error(ErrorCode::kInvalidArgument, "kite tail_len must be >= 1");
  KiteGraph out;
  std::vector<LabelPair> edges;
  for (std::size_t j = 1; j <= spec.branches; ++j) {
    const std::string prefix = "k" + std::to_string(j) + "_";
    const std::string head = prefix + "head";
    const std::string merge = prefix + "merge";
    const std::string tip = "a" + std::to_string(j);
    edges.emplace_back("u", head);
    for (const char* side : {"d0", "d1"}) {
      edges.emplace_back(head, prefix + side);
      edges.emplace_back(prefix + side, merge);
    }
    std::string prev = merge;
    for (std::size_t s = 1; s < spec.tail_len; ++s) {
      std::string next = prefix + "t" + std::to_string(s);
      edges.emplace_back(prev, next);
      prev = next;
    }
    edges.emplace_back(prev, tip);
    edges.emplace_back(tip, "v");
    out.suggested_witness.push_back(prefix + "d0");
    out.tips.push_back(tip);
  }
  out.graph = build_graph(edges);
  out.critical_edge = {"u", "v"};
  return out;
}

NonbinarySpec NonbinarySpec::canonical(std::size_t d) {
  return NonbinarySpec{d, canonical_conflict_free(d)};
}

namespace detail {

NonbinaryGraph nonbinary_graph_unchecked(const NonbinarySpec& spec) {
  if (spec.d == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one digit");
  std::set<TernaryString> seen;
  for (const auto& x : spec.strings) {
    if (x.size() != spec.d) {
      throw Error(ErrorCode::kLengthMismatch,
                  "string " + x.str() + " does not have length " + std::to_string(spec.d));
    }
    if (!seen.insert(x).second) throw Error(ErrorCode::kEqualStrings, x.str());
  }

  NonbinaryGraph out;
  std::vector<LabelPair> edges;
  auto digit = [](std::size_t j) { return "w" + std::to_string(j); };
  for (std::size_t j = 1; j <= spec.d; ++j) edges.emplace_back("c", digit(j));
  out.witness.push_back(digit(0));
  for (std::size_t j = 1; j <= spec.d; ++j) out.witness.push_back(digit(j));

  for (const auto& x : spec.strings) {
    const std::string s = x.str();
    std::vector<VertexLabel> page{"a" + s, "p" + s + "_1", "p" + s + "_2", "p" + s + "_3",
                                  "b" + s};
    for (std::size_t t = 0; t + 1 < page.size(); ++t) edges.emplace_back(page[t], page[t + 1]);
    edges.emplace_back(digit(0), page.front());
    for (std::size_t j = 1; j <= spec.d; ++j) {
      if (x[j - 1] == 1) {
        edges.emplace_back(page.back(), digit(j));
      } else if (x[j - 1] == 2) {
        std::string mid = "r" + s + "_" + std::to_string(j);
        edges.emplace_back(page.back(), mid);
        edges.emplace_back(mid, digit(j));
        out.ramps.push_back({mid, j, x});
      }
    }
    out.page_tips.push_back(page.front());
    out.pages.push_back(std::move(page));
  }
  std::vector<VertexLabel> vertices(out.witness);
  vertices.push_back("c");
  out.graph = build_graph(vertices, edges);
  out.critical_edge = {"c", digit(0)};
  return out;
}

}  // namespace detail

NonbinaryGraph nonbinary_graph(const NonbinarySpec& spec) {
  for (const auto& x : spec.strings) {
    if (x.size() != spec.d) {
      throw Error(ErrorCode::kLengthMismatch,
                  "string " + x.str() + " does not have length " + std::to_string(spec.d));
    }
  }
  if (auto pair = find_conflict(spec.strings)) {
    throw Error(ErrorCode::kConflictingStrings,
                pair->first.str() + " conflicts with " + pair->second.str());
  }
  return detail::nonbinary_graph_unchecked(spec);
}

std::vector<std::uint32_t> ramp_midpoint_code(std::size_t d, std::size_t digit,
                                              const TernaryString& x) {
  if (x.size() != d) throw Error(ErrorCode::kLengthMismatch, "string length differs from d");
  if (digit < 1 || digit > d) throw Error(ErrorCode::kInvalidArgument, "digit out of range");
  if (x[digit - 1] != 2) {
    throw Error(ErrorCode::kNotARamp,
                x.str() + " has no ramp at digit " + std::to_string(digit));
  }
  std::vector<std::uint32_t> code(d);
  for (std::size_t j = 1; j <= d; ++j) {
    if (j == digit) {
      code[j - 1] = 1;
    } else {
      code[j - 1] = x[j - 1] == 1 ? 2 : 3;
    }
  }
  return code;
}

std::string tail_label(std::size_t s) { return "tail_" + std::to_string(s); }

Graph tail_graph(const TailSpec& spec) {
  if (spec.length == 0) throw Error(ErrorCode::kInvalidArgument, "tail length must be >= 1");
  spec.base.id(spec.attach);
  for (std::size_t s = 1; s <= spec.length; ++s) {
    if (spec.base.contains(tail_label(s))) {
      throw Error(ErrorCode::kLabelCollision, "base already has a vertex " + tail_label(s));
    }
  }
  auto edges = spec.base.labeled_edges();
  std::string prev = spec.attach;
  for (std::size_t s = 1; s <= spec.length; ++s) {
    edges.emplace_back(prev, tail_label(s));
    prev = tail_label(s);
  }
  return build_graph(spec.base.labels(), edges);
}

namespace {

std::string num(std::size_t i) { return std::to_string(i); }

}  // namespace

Graph path_graph(std::size_t n) {
  std::vector<VertexLabel> vertices;
  std::vector<LabelPair> edges;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(num(i));
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(num(i), num(i + 1));
  return build_graph(vertices, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs >= 3 vertices");
  std::vector<LabelPair> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(num(i), num((i + 1) % n));
  return build_graph(edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<VertexLabel> vertices;
  std::vector<LabelPair> edges;
  for (std::size_t i = 0; i < n; ++i) {
    vertices.push_back(num(i));
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(num(i), num(j));
  }
  return build_graph(vertices, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<VertexLabel> vertices{"0"};
  std::vector<LabelPair> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back("0", num(i));
  return build_graph(vertices, edges);
}

Graph wheel_graph(std::size_t rim) {
  if (rim < 3) throw Error(ErrorCode::kInvalidArgument, "wheel rim needs >= 3 vertices");
  std::vector<LabelPair> edges;
  for (std::size_t i = 1; i <= rim; ++i) {
    edges.emplace_back("0", num(i));
    edges.emplace_back(num(i), num(i % rim + 1));
  }
  return build_graph(edges);
}

Graph ladder_graph(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "ladder needs >= 1 rung");
  std::vector<LabelPair> edges;
  for (std::size_t a = 0; a < n; ++a) {
    edges.emplace_back(StripVertex{a, 0}.label(), StripVertex{a, 1}.label());
    if (a + 1 < n) {
      for (int b = 0; b < 2; ++b) {
        edges.emplace_back(StripVertex{a, b}.label(), StripVertex{a + 1, b}.label());
      }
    }
  }
  return build_graph(edges);
}

Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    auto a = perm[i];
    auto b = perm[parent(rng)];
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  std::bernoulli_distribution coin(p);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!edges.contains({a, b}) && coin(rng)) edges.insert({a, b});
    }
  }
  std::vector<VertexLabel> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(num(i));
  std::vector<LabelPair> labeled;
  for (auto [a, b] : edges) labeled.emplace_back(num(a), num(b));
  return build_graph(vertices, labeled);
}

}  // namespace metricdim
