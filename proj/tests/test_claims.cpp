#include <doctest.h>

#include <algorithm>

#include "metricdim/claims.hpp"
#include "metricdim/error.hpp"

using namespace metricdim;

TEST_CASE("registry is sorted and unique") {
  const auto& r = claim_registry();
  CHECK(r.size() == 16);
  CHECK(std::is_sorted(r.begin(), r.end(), [](auto& a, auto& b) { return a.id < b.id; }));
  CHECK(std::adjacent_find(r.begin(), r.end(), [](auto& a, auto& b) { return a.id == b.id; }) ==
        r.end());
}

TEST_CASE("filter runs only matching claims") {
  VerifyOptions options;
  options.filter = "strip";
  auto reports = run_verify_suite(options);
  CHECK(reports.size() == 6);
  for (const auto& r : reports) {
    CHECK(r.claim_id.starts_with("strip."));
    CHECK(r.status == ClaimStatus::kPass);
  }
}

TEST_CASE("zero budget skips expensive claims only") {
  VerifyOptions options;
  options.budget = std::chrono::duration<double>(0);
  auto reports = run_verify_suite(options);
  CHECK(reports.size() == claim_registry().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& info = claim_registry()[i];
    CHECK(reports[i].claim_id == info.id);
    if (info.cost_seconds > 0) {
      CHECK(reports[i].status == ClaimStatus::kSkipped);
    } else {
      CHECK(reports[i].status == ClaimStatus::kPass);
    }
  }
}

TEST_CASE("run_claim and report JSON") {
  auto r = run_claim("strip.lemmas", {});
  CHECK(r.status == ClaimStatus::kPass);
  auto j = to_json(r);
  CHECK(j["claim_id"] == "strip.lemmas");
  CHECK(j["status"] == "PASS");
  CHECK_THROWS_AS(run_claim("no.such.claim", {}), Error);
}

TEST_CASE("seeded claims are reproducible") {
  VerifyOptions options;
  auto a = run_claim("strip.unresolved-pair", options);
  auto b = run_claim("strip.unresolved-pair", options);
  CHECK(a.details == b.details);
  options.seed = 1;
  CHECK(run_claim("strip.unresolved-pair", options).status == ClaimStatus::kPass);
}
