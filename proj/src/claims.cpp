#include "metricdim/claims.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "metricdim/families.hpp"
#include "metricdim/oracle.hpp"
#include "metricdim/perturb.hpp"
#include "metricdim/resolving.hpp"
#include "metricdim/ternary.hpp"

namespace metricdim {

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kPass: return "PASS";
    case ClaimStatus::kFail: return "FAIL";
    case ClaimStatus::kSkipped: return "SKIPPED";
  }
  return "FAIL";
}

namespace {

// Collects the first few violations of a check.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++cases_;
    if (ok) return;
    ++violations_;
    if (examples_.size() < 3) examples_.push_back(what);
  }
  std::size_t cases() const { return cases_; }

  ClaimOutcome outcome(const std::string& summary) const {
    std::ostringstream out;
    out << summary << "; " << cases_ << " cases, " << violations_ << " violations";
    for (const auto& e : examples_) out << "; " << e;
    return {violations_ == 0 ? ClaimStatus::kPass : ClaimStatus::kFail, out.str()};
  }

 private:
  std::size_t cases_ = 0;
  std::size_t violations_ = 0;
  std::vector<std::string> examples_;
};

std::string join(const std::vector<VertexLabel>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : ",") + l;
  return "(" + out + ")";
}

std::size_t beta(const Graph& g, const ClaimContext& ctx = {}) {
  ExactOptions options;
  if (ctx.deadline != std::chrono::steady_clock::time_point{}) options.deadline = ctx.deadline;
  return metric_dimension_exact(g, options).dimension;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

// ---------------------------------------------------------------------------
// Strip graphs

ClaimOutcome strip_sequences(const ClaimContext&) {
  const std::vector<std::uint64_t> alpha{0, 1, 1, 2, 2, 2, 2, 3, 3, 4, 4, 4, 4, 5};
  const std::vector<std::uint64_t> beta_seq{1, 1, 1, 1, 2, 2, 3, 3, 3, 3, 4, 4, 5, 5};
  Tally t;
  for (std::uint64_t k = 0; k < alpha.size(); ++k) {
    t.check(strip_alpha(2, k) == alpha[k], "alpha(2," + std::to_string(k) + ")");
    t.check(strip_beta(2, k) == beta_seq[k], "beta(2," + std::to_string(k) + ")");
  }
  return t.outcome("alpha(2,0..13), beta(2,0..13) against the reference sequences");
}

ClaimOutcome strip_oracle_vs_bfs(const ClaimContext&) {
  constexpr std::size_t kCols = 40;
  Tally t;
  for (std::size_t i = 1; i <= 3; ++i) {
    Graph g = strip_graph({i, true, kCols});
    const std::size_t lo = i + 1;
    const std::size_t hi = kCols - i - 2;
    for (std::size_t a = lo; a <= hi; ++a) {
      for (int b = 0; b < 2; ++b) {
        DistanceMap from = bfs_distances(g, StripVertex{a, b}.label());
        for (std::size_t c = lo; c <= hi; ++c) {
          for (int d = 0; d < 2; ++d) {
            std::uint64_t gap = a > c ? a - c : c - a;
            std::uint64_t predicted = b == d ? strip_alpha(i, gap) : strip_beta(i, gap);
            Distance actual = from.at(g, StripVertex{c, d}.label());
            t.check(actual.reachable() && actual.value() == predicted,
                    "i=" + std::to_string(i) + " " + StripVertex{a, b}.label() + "->" +
                        StripVertex{c, d}.label());
          }
        }
      }
    }
  }
  return t.outcome("closed forms vs BFS on 40-column primed windows, interior margin i+1");
}

ClaimOutcome strip_lemmas(const ClaimContext&) {
  Tally t;
  std::size_t premises = 0;
  for (std::uint64_t i = 1; i <= 6; ++i) {
    auto a = [i](std::uint64_t k) { return strip_alpha(i, k); };
    auto b = [i](std::uint64_t k) { return strip_beta(i, k); };
    for (std::uint64_t k = 0; k <= 200; ++k) {
      const std::string at = " i=" + std::to_string(i) + " k=" + std::to_string(k);
      t.check(a(k) <= a(k + 1) && b(k) <= b(k + 1) && a(k) <= b(k + 1) && b(k) <= a(k + 1),
              "monotone" + at);

      bool differs = false;
      for (std::uint64_t j = 0; j <= i; ++j) differs = differs || a(k + j) != b(k + j);
      t.check(differs, "opposite" + at);

      bool alpha_flat = true;
      bool beta_flat = true;
      for (std::uint64_t j = 1; j <= i + 1; ++j) {
        alpha_flat = alpha_flat && a(k + j) == a(k);
        beta_flat = beta_flat && b(k + j) == b(k);
      }
      premises += (alpha_flat ? 1 : 0) + (beta_flat ? 1 : 0);
      t.check(!alpha_flat || b(k + i) < b(k + i + 1), "sameside(alpha)" + at);
      t.check(!beta_flat || a(k + i) < a(k + i + 1), "sameside(beta)" + at);

      t.check(a(k) < b(k + i + 1) && b(k) < a(k + i + 1), "diagonal" + at);
    }
  }
  t.check(premises > 0, "sameside premise never holds");
  return t.outcome("monotone/opposite/sameside/diagonal for i=1..6, k=0..200, " +
                   std::to_string(premises) + " sameside premises");
}

ClaimOutcome strip_canonical_resolving(const ClaimContext&) {
  Tally t;
  for (std::size_t i = 1; i <= 3; ++i) {
    auto w = labels_of(strip_canonical_set(i));
    t.check(w.size() == 2 * i + 1, "size i=" + std::to_string(i));
    for (std::size_t cols : {10, 20, 40}) {
      Graph g = strip_graph({i, true, cols});
      auto pair = find_unresolved_pair(g, w);
      t.check(!pair, "i=" + std::to_string(i) + " cols=" + std::to_string(cols) +
                         (pair ? " unresolved " + pair->first + "," + pair->second : ""));
    }
  }
  return t.outcome("canonical 2i+1 set resolves primed windows, i=1..3, cols 10/20/40");
}

ClaimOutcome strip_unresolved(const ClaimContext& ctx) {
  constexpr std::size_t kCols = 20;
  constexpr int kTrials = 50;
  std::mt19937_64 rng(ctx.seed ^ 0x05);
  Tally t;
  for (std::size_t i = 1; i <= 3; ++i) {
    Graph g = strip_graph({i, false, kCols});
    for (int trial = 0; trial < kTrials; ++trial) {
      // Columns < limit, so k = 1 + max column stays inside the window.
      std::uniform_int_distribution<std::size_t> limit_dist(1, kCols - 1);
      std::size_t limit = limit_dist(rng);
      std::vector<StripVertex> w;
      std::bernoulli_distribution coin(0.4);
      for (std::size_t a = 0; a < limit; ++a) {
        for (int b = 0; b < 2; ++b) {
          if (coin(rng)) w.push_back({a, b});
        }
      }
      if (w.empty()) w.push_back({limit - 1, static_cast<int>(rng() % 2)});
      auto [x, y] = strip_unresolved_pair(w);
      const std::size_t k = x.column;
      auto labels = labels_of(w);
      auto cx = metric_code(g, labels, x.label());
      auto cy = metric_code(g, labels, y.label());
      const std::string at = "i=" + std::to_string(i) + " W=" + join(labels);
      t.check(cx == cy, "codes differ " + at);
      for (std::size_t j = 0; j < w.size(); ++j) {
        std::uint64_t expected = ceil_div(k - w[j].column, i);
        t.check(cx.entries[j].reachable() && cx.entries[j].value() == expected,
                "entry " + labels[j] + " " + at);
      }
    }
  }
  return t.outcome("(v_k,0, v_k,1) unresolved with entries ceil((k-a)/i), 50 W per i");
}

ClaimOutcome strip_ladder(const ClaimContext& ctx) {
  Tally t;
  for (std::size_t n = 2; n <= 10; ++n) {
    std::size_t d = beta(ladder_graph(n), ctx);
    t.check(d == 2, "P_" + std::to_string(n) + " x K_2 has dimension " + std::to_string(d));
  }
  return t.outcome("exact dimension of P_n x K_2 is 2 for n=2..10");
}

// ---------------------------------------------------------------------------
// Edge perturbation

std::vector<VertexLabel> random_resolving_set(const Graph& g, std::mt19937_64& rng) {
  std::vector<VertexLabel> pool = g.labels();
  std::shuffle(pool.begin(), pool.end(), rng);
  std::uniform_int_distribution<std::size_t> start(1, std::min<std::size_t>(3, pool.size()));
  std::vector<VertexLabel> w(pool.begin(), pool.begin() + static_cast<long>(start(rng)));
  std::size_t next = w.size();
  while (!is_resolving(g, w)) w.push_back(pool[next++]);
  return w;
}

std::vector<LabelPair> non_edges(const Graph& g) {
  std::vector<LabelPair> out;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
      if (!g.has_edge(u, v)) out.emplace_back(g.label(u), g.label(v));
    }
  }
  return out;
}

std::vector<LabelPair> removable_edges(const Graph& g) {
  std::vector<LabelPair> out;
  for (const auto& [u, v] : g.labeled_edges()) {
    if (is_connected(remove_edge(g, u, v))) out.emplace_back(u, v);
  }
  return out;
}

Graph random_graph(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> size(min_n, max_n);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  std::size_t n = size(rng);
  double p = density(rng);
  return random_connected_graph(n, p, rng);
}

ClaimOutcome perturb_soundness(const ClaimContext& ctx) {
  constexpr int kTrials = 1200;
  std::mt19937_64 rng(ctx.seed ^ 0x07);
  Tally t;
  std::size_t additions = 0;
  std::size_t removals = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    Graph g = random_graph(rng, 3, 12);
    auto w = random_resolving_set(g, rng);
    auto adds = non_edges(g);
    auto rems = removable_edges(g);
    bool add = !adds.empty() && (rems.empty() || rng() % 2 == 0);
    if (!add && rems.empty()) continue;
    const auto& pool = add ? adds : rems;
    const auto& [u, v] = pool[rng() % pool.size()];
    Graph edited = add ? add_edge(g, u, v) : remove_edge(g, u, v);
    auto w2 = add ? augment_addition(g, w, u, v) : augment_removal(g, w, u, v);
    (add ? additions : removals) += 1;
    bool keeps_prefix = w2.size() >= w.size() && std::equal(w.begin(), w.end(), w2.begin());
    t.check(keeps_prefix && is_resolving(edited, w2) && oracle::resolves(edited, w2),
            std::string(add ? "add " : "remove ") + u + "-" + v + " W=" + join(w));
  }
  return t.outcome("augmented sets resolve the edited graph (" + std::to_string(additions) +
                   " additions, " + std::to_string(removals) + " removals)");
}

ClaimOutcome perturb_removal_bound(const ClaimContext& ctx) {
  constexpr int kTrials = 320;
  std::mt19937_64 rng(ctx.seed ^ 0x08);
  Tally t;
  int done = 0;
  while (done < kTrials) {
    Graph g = random_graph(rng, 4, 10);
    auto rems = removable_edges(g);
    if (rems.empty()) continue;
    const auto& [u, v] = rems[rng() % rems.size()];
    std::size_t before = beta(g, ctx);
    std::size_t after = beta(remove_edge(g, u, v), ctx);
    t.check(after <= before + 2, "beta(G-e)=" + std::to_string(after) +
                                     " beta(G)=" + std::to_string(before));
    ++done;
  }
  return t.outcome("beta(G - e) <= beta(G) + 2");
}

// ---------------------------------------------------------------------------
// Exact search and the degree bound

std::vector<std::pair<std::string, Graph>> degree_corpus(std::uint64_t seed) {
  std::vector<std::pair<std::string, Graph>> corpus;
  for (std::size_t n = 2; n <= 8; ++n) corpus.emplace_back("P" + std::to_string(n), path_graph(n));
  for (std::size_t n = 3; n <= 8; ++n) corpus.emplace_back("C" + std::to_string(n), cycle_graph(n));
  for (std::size_t n = 2; n <= 7; ++n) {
    corpus.emplace_back("K" + std::to_string(n), complete_graph(n));
  }
  for (std::size_t n = 2; n <= 9; ++n) corpus.emplace_back("S" + std::to_string(n), star_graph(n));
  for (std::size_t n = 3; n <= 8; ++n) corpus.emplace_back("W" + std::to_string(n), wheel_graph(n));
  for (std::size_t n = 2; n <= 6; ++n) {
    corpus.emplace_back("ladder" + std::to_string(n), ladder_graph(n));
  }
  for (std::size_t i = 1; i <= 2; ++i) {
    corpus.emplace_back("strip" + std::to_string(i) + "'", strip_graph({i, true, 6}));
    corpus.emplace_back("strip" + std::to_string(i), strip_graph({i, false, 6}));
  }
  corpus.emplace_back("kite3", kite_graph({3, 2}).graph);
  std::mt19937_64 rng(seed ^ 0x09);
  for (int r = 0; r < 40; ++r) corpus.emplace_back("random" + std::to_string(r), random_graph(rng, 2, 10));
  return corpus;
}

ClaimOutcome degree_bound(const ClaimContext& ctx) {
  Tally t;
  for (const auto& [name, g] : degree_corpus(ctx.seed)) {
    std::size_t k = beta(g, ctx);
    std::uint64_t limit = 1;
    for (std::size_t j = 0; j < k; ++j) limit *= 3;
    t.check(max_degree(g) <= limit - 1, name + " maxdeg=" + std::to_string(max_degree(g)) +
                                            " beta=" + std::to_string(k));
  }
  return t.outcome("max degree <= 3^beta - 1 over the corpus");
}

ClaimOutcome exhaustiveness_audit(const ClaimContext& ctx) {
  constexpr int kSample = 200;
  std::mt19937_64 rng(ctx.seed ^ 0x14);
  Tally t;
  for (int s = 0; s < kSample; ++s) {
    Graph g = random_graph(rng, 1, 7);
    DimensionResult pruned = metric_dimension_exact(g);
    auto brute = oracle::dimension_bruteforce(g, g.vertex_count());
    std::vector<VertexLabel> brute_witness;
    if (brute) {
      for (VertexId v : brute->witness) brute_witness.push_back(g.label(v));
    }
    t.check(brute && brute->dimension == pruned.dimension && brute_witness == pruned.witness,
            "graph " + std::to_string(s) + " pruned=" + join(pruned.witness) +
                " brute=" + join(brute_witness));
  }
  return t.outcome("pruned search equals unpruned enumeration (dimension and witness)");
}

// ---------------------------------------------------------------------------
// Ternary strings

ClaimOutcome ternary_canonical(const ClaimContext&) {
  Tally t;
  for (std::size_t n = 1; n <= 8; ++n) {
    auto s = canonical_conflict_free(n);
    t.check(s.size() == conflict_free_lower_bound(n), "size n=" + std::to_string(n));
    t.check(is_conflict_free(s), "conflict n=" + std::to_string(n));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    auto best = max_conflict_free_bruteforce(n);
    t.check(best.size == conflict_free_lower_bound(n) && is_conflict_free(best.witness),
            "max n=" + std::to_string(n) + " is " + std::to_string(best.size));
  }
  return t.outcome("canonical sets conflict-free of size 2^n+n2^(n-1), n=1..8; maximum n=1..3");
}

ClaimOutcome ternary_max_n4(const ClaimContext&) {
  Tally t;
  auto best = max_conflict_free_bruteforce(4);
  t.check(best.size == conflict_free_lower_bound(4) && is_conflict_free(best.witness),
          "max n=4 is " + std::to_string(best.size));
  return t.outcome("maximum conflict-free subset of T_4 has 2^4+4*2^3 = 48 strings");
}

// ---------------------------------------------------------------------------
// Constructions

ClaimOutcome nonbinary_d2(const ClaimContext&) {
  Tally t;
  auto nb = nonbinary_graph(NonbinarySpec::canonical(2));
  t.check(nb.graph.vertex_count() == 48, "vertex count " + std::to_string(nb.graph.vertex_count()));

  auto pair = find_unresolved_pair(nb.graph, nb.witness);
  t.check(!pair, "(a) {w0,w1,w2} resolves G" + (pair ? ": " + pair->first + "," + pair->second : ""));

  std::vector<VertexLabel> digits(nb.witness.begin() + 1, nb.witness.end());
  for (const auto& ramp : nb.ramps) {
    auto code = metric_code(nb.graph, digits, ramp.midpoint);
    auto predicted = ramp_midpoint_code(2, ramp.digit, ramp.string);
    bool same = code.entries.size() == predicted.size();
    for (std::size_t j = 0; same && j < predicted.size(); ++j) {
      same = code.entries[j].reachable() && code.entries[j].value() == predicted[j];
    }
    t.check(same, "(b) ramp midpoint " + ramp.midpoint);
  }

  Graph plus = add_edge(nb.graph, nb.critical_edge.first, nb.critical_edge.second);
  bool certified = block_lower_bound_check(plus, nb.pages, nb.page_tips);
  t.check(certified && nb.pages.size() == 8, "(c) page bound certifies beta(G+e) >= 7");
  return t.outcome("d=2 pages/ramps/digits: resolving triple, ramp codes, page lower bound 7");
}

ClaimOutcome nonbinary_exact(const ClaimContext& ctx) {
  auto nb = nonbinary_graph(NonbinarySpec::canonical(2));
  Graph plus = add_edge(nb.graph, nb.critical_edge.first, nb.critical_edge.second);
  ExactOptions options;
  options.deadline = ctx.deadline;
  try {
    auto before = metric_dimension_exact(nb.graph, options);
    auto after = metric_dimension_exact(plus, options);
    Tally t;
    t.check(before.dimension <= 3, "beta(G)=" + std::to_string(before.dimension));
    t.check(after.dimension >= 7, "beta(G+e)=" + std::to_string(after.dimension));
    return t.outcome("exact beta(G)=" + std::to_string(before.dimension) +
                     ", beta(G+e)=" + std::to_string(after.dimension));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudget) throw;
    return {ClaimStatus::kSkipped, "exact search did not finish within the budget"};
  }
}

ClaimOutcome kite_doubling(const ClaimContext& ctx) {
  const KiteSpec spec{5, 4};
  auto kite = kite_graph(spec);
  Graph plus = add_edge(kite.graph, kite.critical_edge.first, kite.critical_edge.second);
  Tally t;
  t.check(kite.graph.vertex_count() == 2 + spec.branches * (4 + spec.tail_len), "vertex count");
  auto before_pair = find_unresolved_pair(kite.graph, kite.suggested_witness);
  t.check(!before_pair, "suggested set resolves G");
  auto after_pair = find_unresolved_pair(plus, kite.suggested_witness);
  const std::set<VertexLabel> tips(kite.tips.begin(), kite.tips.end());
  t.check(after_pair && tips.contains(after_pair->first) && tips.contains(after_pair->second),
          "suggested set leaves a pair of tips unresolved after adding u-v");

  std::string info;
  ExactOptions options;
  options.deadline = ctx.deadline;
  try {
    auto before = metric_dimension_exact(kite.graph, options);
    auto after = metric_dimension_exact(plus, options);
    bool grows = after.dimension >= before.dimension + spec.branches - 2;
    info = "beta(G)=" + std::to_string(before.dimension) +
           " beta(G+e)=" + std::to_string(after.dimension) +
           (grows ? " (grows by >= m-2)" : " (grows by less than m-2)");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudget) throw;
    info = "exact dimensions not computed within the budget";
  }
  return t.outcome("kite m=5: " + info);
}

ClaimOutcome tail_sandwich(const ClaimContext& ctx) {
  constexpr int kBases = 110;
  std::mt19937_64 rng(ctx.seed ^ 0x13);
  Tally t;
  for (int b = 0; b < kBases; ++b) {
    Graph base = random_graph(rng, 2, 9);
    const auto& attach = base.label(static_cast<VertexId>(rng() % base.vertex_count()));
    std::size_t low = beta(base, ctx);
    for (std::size_t len = 1; len <= 5; ++len) {
      std::size_t with_tail = beta(tail_graph({base, attach, len}), ctx);
      t.check(low <= with_tail && with_tail <= low + 2,
              "base " + std::to_string(b) + " L=" + std::to_string(len) + ": " +
                  std::to_string(low) + " vs " + std::to_string(with_tail));
    }
  }
  return t.outcome("beta(G) <= beta(G + tail) <= beta(G) + 2, tails of length 1..5");
}

std::vector<ClaimInfo> build_registry() {
  std::vector<ClaimInfo> r{
      {"nonbinary.d2", "pages/ramps/digits construction, d=2", 0, nonbinary_d2},
      {"nonbinary.exact-after-edge", "exact dimension of the d=2 construction before/after c-w0",
       10, nonbinary_exact},
      {"kite.doubling", "kite resolving set breaks when u-v is added", 2, kite_doubling},
      {"perturb.removal-bound", "edge removal raises dimension by at most 2", 2,
       perturb_removal_bound},
      {"perturb.soundness", "augmented sets resolve edited graphs", 1, perturb_soundness},
      {"resolving.degree-bound", "max degree <= 3^beta - 1", 1, degree_bound},
      {"resolving.exhaustiveness-audit", "pruned exact search vs brute force", 1,
       exhaustiveness_audit},
      {"strip.alpha-beta-sequences", "alpha_2/beta_2 initial terms", 0, strip_sequences},
      {"strip.canonical-resolving", "canonical set resolves primed windows", 0,
       strip_canonical_resolving},
      {"strip.ladder-dimension", "ladder has dimension 2", 1, strip_ladder},
      {"strip.lemmas", "alpha/beta lemma suite", 0, strip_lemmas},
      {"strip.oracle-vs-bfs", "closed forms agree with BFS", 0, strip_oracle_vs_bfs},
      {"strip.unresolved-pair", "unprimed strips defeat every finite set", 0, strip_unresolved},
      {"tail.sandwich", "pendant tail changes dimension by 0..2", 1, tail_sandwich},
      {"ternary.canonical", "conflict-free sizes and small maxima", 1, ternary_canonical},
      {"ternary.max-n4", "maximum conflict-free subset for n=4", 1, ternary_max_n4},
  };
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return r;
}

ClaimReport run_one(const ClaimInfo& claim, const ClaimContext& ctx) {
  ClaimReport report;
  report.claim_id = claim.id;
  auto start = std::chrono::steady_clock::now();
  try {
    ClaimOutcome outcome = claim.check(ctx);
    report.status = outcome.status;
    report.details = std::move(outcome.details);
  } catch (const std::exception& e) {
    report.status = ClaimStatus::kFail;
    report.details = std::string("error: ") + e.what();
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> registry = build_registry();
  return registry;
}

ClaimReport run_claim(const std::string& id, const VerifyOptions& options) {
  for (const auto& claim : claim_registry()) {
    if (claim.id != id) continue;
    ClaimContext ctx;
    ctx.seed = options.seed;
    ctx.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(options.budget);
    return run_one(claim, ctx);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown claim '" + id + "'");
}

std::vector<ClaimReport> run_verify_suite(const VerifyOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto suite_start = Clock::now();
  const auto suite_end =
      suite_start + std::chrono::duration_cast<Clock::duration>(options.budget);
  std::vector<ClaimReport> reports;
  for (const auto& claim : claim_registry()) {
    if (!claim.id.starts_with(options.filter)) continue;
    std::chrono::duration<double> remaining = suite_end - Clock::now();
    if (claim.cost_seconds > 0 && claim.cost_seconds > remaining.count()) {
      reports.push_back({claim.id, ClaimStatus::kSkipped,
                         "estimated " + std::to_string(static_cast<int>(claim.cost_seconds)) +
                             "s exceeds remaining budget",
                         std::chrono::duration<double>(0)});
      continue;
    }
    ClaimContext ctx;
    ctx.seed = options.seed;
    // Cheap invariants get a fixed allowance even when the budget is spent.
    ctx.deadline = std::max(suite_end, Clock::now() + std::chrono::seconds(60));
    reports.push_back(run_one(claim, ctx));
  }
  return reports;
}

nlohmann::json to_json(const ClaimReport& report) {
  return {{"claim_id", report.claim_id},
          {"status", to_string(report.status)},
          {"details", report.details},
          {"elapsed_seconds", report.elapsed.count()}};
}

}  // namespace metricdim
