// Exact metric dimension by ordered subset enumeration.
//
// Sizes are tried in increasing order starting from the degree bound
// (a graph of dimension k has maximum degree at most 3^k - 1). Within a size,
// subsets are visited in lexicographic order of vertex ids, so the first
// resolving subset found is the lexicographically least minimum one. Each
// search node refines the partition of V induced by the landmarks chosen so
// far; a leaf resolves iff the partition is discrete.
//
// The only pruning is the twin rule: for a twin pair {u, v} a resolving set
// contains u or v. A branch dies as soon as both endpoints of a pair have been
// skipped, or when the twin classes still short of members need more slots
// than remain.

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "metricdim/resolving.hpp"

namespace metricdim {

namespace {

struct TwinStructure {
  // lower_twins[q] = every p < q twin with q.
  std::vector<std::vector<VertexId>> lower_twins;
  // Smallest upper endpoint over all pairs; a first landmark beyond it means
  // that pair was skipped entirely.
  VertexId min_upper = static_cast<VertexId>(-1);
  // Twin classes with at least two members, each sorted; every member pair is
  // a twin pair, so all but one member must be chosen.
  std::vector<std::vector<VertexId>> classes;
  std::vector<int> class_of;
};

TwinStructure analyse_twins(const DistanceTable& dist) {
  const std::size_t n = dist.size();
  TwinStructure t;
  t.lower_twins.resize(n);
  t.class_of.assign(n, -1);
  auto pairs = twin_pairs(dist);

  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto root = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<char>> twin(n, std::vector<char>(n, 0));
  for (auto [p, q] : pairs) {
    t.lower_twins[q].push_back(p);
    t.min_upper = std::min(t.min_upper, q);
    parent[root(p)] = root(q);
    twin[p][q] = twin[q][p] = 1;
  }

  std::vector<std::vector<VertexId>> groups(n);
  for (VertexId v = 0; v < n; ++v) groups[root(v)].push_back(v);
  for (auto& group : groups) {
    if (group.size() < 2) continue;
    bool clique = true;
    for (std::size_t a = 0; a < group.size() && clique; ++a) {
      for (std::size_t b = a + 1; b < group.size() && clique; ++b) {
        clique = twin[group[a]][group[b]] != 0;
      }
    }
    // Twin relations are transitive, so this always holds; a non-clique
    // group would only weaken the bound, never make it unsound.
    if (!clique) continue;
    for (VertexId v : group) t.class_of[v] = static_cast<int>(t.classes.size());
    t.classes.push_back(std::move(group));
  }
  return t;
}

struct SharedState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budget_hit{false};
  std::uint64_t node_budget = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class LevelSearch {
 public:
  LevelSearch(const DistanceTable& dist, const TwinStructure& twins, std::size_t k,
              std::uint32_t buckets, SharedState& shared)
      : dist_(dist),
        twins_(twins),
        n_(dist.size()),
        k_(k),
        buckets_(buckets),
        shared_(shared),
        levels_(k + 1, std::vector<std::uint32_t>(dist.size(), 0)),
        class_count_(k + 1, 0),
        in_set_(dist.size(), 0),
        chosen_in_class_(twins.classes.size(), 0),
        slot_(static_cast<std::size_t>(dist.size()) * buckets, 0),
        stamp_(static_cast<std::size_t>(dist.size()) * buckets, 0) {
    class_count_[0] = 1;
  }

  // Searches all k-subsets whose least element is `first`. On success the
  // subset is left in chosen().
  bool search_first(VertexId first, const std::atomic<VertexId>* best_first) {
    best_first_ = best_first;
    current_first_ = first;
    if (first > twins_.min_upper) return false;
    if (!push(0, first)) {
      pop(first);
      return false;
    }
    bool found = descend(1, first + 1);
    if (!found) pop(first);
    return found;
  }

  const std::vector<VertexId>& chosen() const { return chosen_; }
  bool aborted() const { return aborted_; }

 private:
  bool descend(std::size_t depth, VertexId start) {
    if (depth == k_) return class_count_[depth] == n_;
    if (aborted_) return false;
    const std::size_t remaining = k_ - depth;
    for (VertexId c = start; c + remaining <= n_; ++c) {
      if (c > start) {
        // c - 1 is now skipped for good.
        for (VertexId p : twins_.lower_twins[c - 1]) {
          if (!in_set_[p]) return false;
        }
      }
      bool viable = push(depth, c);
      if (viable && descend(depth + 1, c + 1)) return true;
      pop(c);
      if (aborted_) return false;
    }
    return false;
  }

  // Chooses c as landmark number `depth`, refining level depth into depth+1.
  // Returns false when the twin bound rules the branch out.
  bool push(std::size_t depth, VertexId c) {
    chosen_.push_back(c);
    in_set_[c] = 1;
    if (twins_.class_of[c] >= 0) ++chosen_in_class_[twins_.class_of[c]];
    count_node();

    const auto& prev = levels_[depth];
    auto& next = levels_[depth + 1];
    auto row = dist_.row(c);
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    std::uint32_t classes = 0;
    for (VertexId x = 0; x < n_; ++x) {
      std::size_t key = static_cast<std::size_t>(prev[x]) * buckets_ + row[x].value();
      if (stamp_[key] != epoch_) {
        stamp_[key] = epoch_;
        slot_[key] = classes++;
      }
      next[x] = slot_[key];
    }
    class_count_[depth + 1] = classes;
    return twin_bound_ok(depth + 1, c + 1);
  }

  void pop(VertexId c) {
    chosen_.pop_back();
    in_set_[c] = 0;
    if (twins_.class_of[c] >= 0) --chosen_in_class_[twins_.class_of[c]];
  }

  bool twin_bound_ok(std::size_t depth, VertexId next_free) const {
    std::size_t needed = 0;
    for (std::size_t i = 0; i < twins_.classes.size(); ++i) {
      const auto& members = twins_.classes[i];
      std::size_t want = members.size() - 1;
      std::size_t have = chosen_in_class_[i];
      if (have >= want) continue;
      std::size_t available = static_cast<std::size_t>(
          members.end() - std::lower_bound(members.begin(), members.end(), next_free));
      if (want - have > available) return false;
      needed += want - have;
    }
    return needed <= k_ - depth;
  }

  void count_node() {
    std::uint64_t seen = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (shared_.node_budget != 0 && seen > shared_.node_budget) {
      shared_.budget_hit = true;
    }
    if (shared_.deadline && (seen & 0xfff) == 0 &&
        std::chrono::steady_clock::now() > *shared_.deadline) {
      shared_.budget_hit = true;
    }
    if (shared_.budget_hit.load(std::memory_order_relaxed)) aborted_ = true;
    if (best_first_ && best_first_->load(std::memory_order_relaxed) < current_first_) {
      aborted_ = true;
    }
  }

  const DistanceTable& dist_;
  const TwinStructure& twins_;
  std::size_t n_;
  std::size_t k_;
  std::uint32_t buckets_;
  SharedState& shared_;
  std::vector<std::vector<std::uint32_t>> levels_;
  std::vector<std::uint32_t> class_count_;
  std::vector<char> in_set_;
  std::vector<std::size_t> chosen_in_class_;
  std::vector<VertexId> chosen_;
  std::vector<std::uint32_t> slot_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  bool aborted_ = false;
  const std::atomic<VertexId>* best_first_ = nullptr;
  VertexId current_first_ = 0;
};

std::optional<std::vector<VertexId>> search_level(const DistanceTable& dist,
                                                  const TwinStructure& twins, std::size_t k,
                                                  std::uint32_t buckets, unsigned threads,
                                                  SharedState& shared) {
  const std::size_t n = dist.size();
  const VertexId last_first = static_cast<VertexId>(n - k);
  constexpr VertexId kNone = static_cast<VertexId>(-1);

  if (threads <= 1) {
    LevelSearch search(dist, twins, k, buckets, shared);
    for (VertexId first = 0; first <= last_first; ++first) {
      if (search.search_first(first, nullptr)) return search.chosen();
      if (search.aborted()) break;
    }
    if (shared.budget_hit) throw Error(ErrorCode::kBudget, "exact search budget exhausted");
    return std::nullopt;
  }

  std::atomic<VertexId> next_first{0};
  std::atomic<VertexId> best_first{kNone};
  std::vector<VertexId> best_witness;
  std::mutex best_mutex;

  auto worker = [&] {
    LevelSearch search(dist, twins, k, buckets, shared);
    for (;;) {
      VertexId first = next_first.fetch_add(1);
      if (first > last_first || first > best_first.load()) return;
      if (search.search_first(first, &best_first)) {
        std::lock_guard lock(best_mutex);
        if (first < best_first.load()) {
          best_first = first;
          best_witness = search.chosen();
        }
        return;
      }
      if (shared.budget_hit) return;
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (best_first.load() != kNone) return best_witness;
  if (shared.budget_hit) throw Error(ErrorCode::kBudget, "exact search budget exhausted");
  return std::nullopt;
}

}  // namespace

DimensionResult metric_dimension_exact(const Graph& g, const ExactOptions& options) {
  const std::size_t n = g.vertex_count();
  DimensionResult result;
  result.exhaustive = true;
  if (n <= 1) return result;

  DistanceTable dist(g);
  if (!dist.connected()) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  std::size_t max_k = options.max_k.value_or(n - 1);
  if (max_k < 1) throw Error(ErrorCode::kInvalidArgument, "max_k must be at least 1");
  max_k = std::min(max_k, n);

  std::uint32_t diameter = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (Distance d : dist.row(u)) diameter = std::max(diameter, d.value());
  }
  const TwinStructure twins = analyse_twins(dist);
  SharedState shared;
  shared.node_budget = options.node_budget;
  shared.deadline = options.deadline;

  for (std::size_t k = degree_lower_bound(max_degree(g)); k <= max_k; ++k) {
    auto found = search_level(dist, twins, k, diameter + 1, options.threads, shared);
    if (found) {
      result.dimension = k;
      for (VertexId v : *found) result.witness.push_back(g.label(v));
      result.nodes_explored = shared.nodes.load();
      return result;
    }
  }
  throw Error(ErrorCode::kExceeded,
              "no resolving set with at most " + std::to_string(max_k) + " vertices");
}

}  // namespace metricdim
