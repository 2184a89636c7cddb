#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace metricdim {

enum class ClaimStatus { kPass, kFail, kSkipped };

std::string_view to_string(ClaimStatus status);

struct ClaimReport {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::kFail;
  std::string details;
  std::chrono::duration<double> elapsed{0};
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'2026;

struct VerifyOptions {
  // Only claims whose id starts with this prefix run.
  std::string filter;
  // Claims whose cost estimate exceeds the remaining budget are SKIPPED.
  std::chrono::duration<double> budget{600.0};
  std::uint64_t seed = kDefaultSeed;
};

// What a claim check sees while running.
struct ClaimContext {
  std::uint64_t seed = kDefaultSeed;
  // Wall-clock limit for open-ended searches inside the check.
  std::chrono::steady_clock::time_point deadline;
};

struct ClaimOutcome {
  ClaimStatus status = ClaimStatus::kPass;
  std::string details;
};

struct ClaimInfo {
  std::string id;
  std::string summary;
  // Rough cost on a desk machine. Zero marks a cheap invariant that runs
  // regardless of budget.
  double cost_seconds = 0;
  std::function<ClaimOutcome(const ClaimContext&)> check;
};

// Sorted by id.
const std::vector<ClaimInfo>& claim_registry();

// Throws InvalidArgument for an unknown id.
ClaimReport run_claim(const std::string& id, const VerifyOptions& options);

// Reports come back sorted by claim id.
std::vector<ClaimReport> run_verify_suite(const VerifyOptions& options);

nlohmann::json to_json(const ClaimReport& report);

}  // namespace metricdim
