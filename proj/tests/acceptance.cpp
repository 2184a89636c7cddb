// Acceptance gate: one line per criterion, each with its pinned time limit.
// A criterion fails when its claim fails or runs past the limit.

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "metricdim/claims.hpp"

namespace md = metricdim;

namespace {

struct Criterion {
  int number;
  std::vector<std::string> claims;
  // nullopt: no wall-clock limit.
  std::optional<double> limit_seconds;
  // Claims that may come back SKIPPED without failing the criterion.
  std::vector<std::string> may_skip = {};
};

const std::vector<Criterion> kCriteria{
    {1, {"strip.alpha-beta-sequences"}, 0.001},
    {2, {"strip.oracle-vs-bfs"}, 5},
    {3, {"strip.lemmas"}, 1},
    {4, {"strip.canonical-resolving"}, 10},
    {5, {"strip.unresolved-pair"}, 5},
    {6, {"strip.ladder-dimension"}, 10},
    {7, {"perturb.soundness"}, 60},
    {8, {"perturb.removal-bound"}, 120},
    {9, {"resolving.degree-bound"}, std::nullopt},
    {10, {"ternary.canonical", "ternary.max-n4"}, 30, {"ternary.max-n4"}},
    {11, {"nonbinary.d2"}, 10},
    {12, {"kite.doubling"}, 300},
    {13, {"tail.sandwich"}, 120},
    {14, {"resolving.exhaustiveness-audit"}, 120},
};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  for (const auto& x : v) {
    if (x == s) return true;
  }
  return false;
}

}  // namespace

int main() {
  md::VerifyOptions options;
  options.budget = std::chrono::seconds(600);
  int failures = 0;
  for (const auto& c : kCriteria) {
    bool pass = true;
    double elapsed = 0;
    std::string notes;
    for (const auto& id : c.claims) {
      md::ClaimReport r = md::run_claim(id, options);
      // The gated part of a criterion does not count against its limit.
      if (!contains(c.may_skip, id)) elapsed += r.elapsed.count();
      bool ok = r.status == md::ClaimStatus::kPass ||
                (r.status == md::ClaimStatus::kSkipped && contains(c.may_skip, id));
      pass = pass && ok;
      notes += " [" + id + " " + std::string(md::to_string(r.status)) + ": " + r.details + "]";
    }
    std::string limit = "none";
    if (c.limit_seconds) {
      limit = std::to_string(*c.limit_seconds) + "s";
      if (elapsed > *c.limit_seconds) {
        pass = false;
        notes += " [time limit exceeded]";
      }
    }
    if (!pass) ++failures;
    std::printf("criterion %2d: %s  elapsed=%.6fs limit=%s%s\n", c.number, pass ? "PASS" : "FAIL",
                elapsed, limit.c_str(), notes.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, kCriteria.size());
  return failures == 0 ? 0 : 1;
}
