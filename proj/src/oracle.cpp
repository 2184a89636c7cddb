#include "metricdim/oracle.hpp"

#include <set>

namespace metricdim::oracle {

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr int kInf = -1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (VertexId v : g.neighbors(static_cast<VertexId>(u))) d[u][v] = 1;
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t u = 0; u < n; ++u) {
      if (d[u][m] == kInf) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (d[m][v] == kInf) continue;
        int via = d[u][m] + d[m][v];
        if (d[u][v] == kInf || via < d[u][v]) d[u][v] = via;
      }
    }
  }
  return d;
}

bool resolves(const std::vector<std::vector<int>>& dist, const std::vector<VertexId>& landmarks) {
  std::set<std::vector<int>> codes;
  for (std::size_t x = 0; x < dist.size(); ++x) {
    std::vector<int> code;
    for (VertexId w : landmarks) code.push_back(dist[x][w]);
    if (!codes.insert(code).second) return false;
  }
  return true;
}

bool resolves(const Graph& g, const std::vector<VertexLabel>& landmarks) {
  std::vector<VertexId> ids;
  for (const auto& w : landmarks) ids.push_back(g.id(w));
  return resolves(all_pairs_distances(g), ids);
}

namespace {

// Advances `combo` (strictly increasing, values < n) to the next
// combination in lexicographic order; false when exhausted.
bool next_combination(std::vector<VertexId>& combo, std::size_t n) {
  const std::size_t k = combo.size();
  std::size_t i = k;
  while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++combo[i - 1];
  for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  return true;
}

}  // namespace

std::optional<BruteForceDimension> dimension_bruteforce(const Graph& g, std::size_t max_k) {
  const std::size_t n = g.vertex_count();
  auto dist = all_pairs_distances(g);
  for (std::size_t k = 0; k <= std::min(max_k, n); ++k) {
    std::vector<VertexId> combo(k);
    for (std::size_t j = 0; j < k; ++j) combo[j] = static_cast<VertexId>(j);
    do {
      if (resolves(dist, combo)) return BruteForceDimension{k, combo};
    } while (k > 0 && next_combination(combo, n));
  }
  return std::nullopt;
}

}  // namespace metricdim::oracle
