#include "metricdim/ternary.hpp"

#include <algorithm>
#include <map>

#include "metricdim/error.hpp"

namespace metricdim {

TernaryString::TernaryString(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
  for (auto d : digits_) {
    if (d > 2) throw Error(ErrorCode::kInvalidArgument, "ternary digit out of range");
  }
}

TernaryString TernaryString::parse(std::string_view text) {
  std::vector<std::uint8_t> digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '2') {
      throw Error(ErrorCode::kInvalidArgument,
                  "not a ternary string: '" + std::string(text) + "'");
    }
    digits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return TernaryString(std::move(digits));
}

std::string TernaryString::str() const {
  std::string out;
  out.reserve(digits_.size());
  for (auto d : digits_) out += static_cast<char>('0' + d);
  return out;
}

ConflictReport conflict(const TernaryString& x, const TernaryString& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch, x.str() + " vs " + y.str());
  }
  if (x == y) throw Error(ErrorCode::kEqualStrings, x.str());
  ConflictReport report;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 2 && y[i] == 2 && !report.shared_two_index) report.shared_two_index = i;
    if (x[i] != y[i] && x[i] + y[i] != 2 && !report.violating_index) {
      // Differing digits summing to 2 are exactly {0, 2}.
      report.violating_index = i;
    }
  }
  report.conflicts = report.shared_two_index && !report.violating_index;
  return report;
}

std::optional<std::pair<TernaryString, TernaryString>> find_conflict(
    std::span<const TernaryString> strings) {
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      if (conflict(strings[i], strings[j]).conflicts) {
        return std::pair{strings[i], strings[j]};
      }
    }
  }
  return std::nullopt;
}

bool is_conflict_free(std::span<const TernaryString> strings) {
  return !find_conflict(strings).has_value();
}

std::vector<TernaryString> all_ternary_strings(std::size_t n) {
  std::vector<TernaryString> out;
  std::vector<std::uint8_t> digits(n, 0);
  for (;;) {
    out.emplace_back(digits);
    std::size_t pos = n;
    while (pos > 0 && digits[pos - 1] == 2) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  return out;
}

std::vector<TernaryString> canonical_conflict_free(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "length must be positive");
  std::vector<TernaryString> out;
  // Binary strings, then each with one position raised to 2; sort at the end.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::uint8_t> digits(n);
    for (std::size_t i = 0; i < n; ++i) digits[i] = (mask >> (n - 1 - i)) & 1;
    out.emplace_back(digits);
    for (std::size_t i = 0; i < n; ++i) {
      if (digits[i] != 0) continue;
      auto raised = digits;
      raised[i] = 2;
      out.emplace_back(std::move(raised));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t conflict_free_lower_bound(std::size_t n) {
  return (std::uint64_t{1} << n) + n * (std::uint64_t{1} << n) / 2;
}

namespace {

// Maximum independent set over at most 64 vertices given as neighbour masks.
void max_independent_set(const std::vector<std::uint64_t>& adj, std::uint64_t candidates,
                         std::uint64_t chosen, std::uint64_t& best_set, int& best_size) {
  int size = __builtin_popcountll(chosen);
  if (candidates == 0) {
    if (size > best_size) {
      best_size = size;
      best_set = chosen;
    }
    return;
  }
  if (size + __builtin_popcountll(candidates) <= best_size) return;
  int v = __builtin_ctzll(candidates);
  std::uint64_t bit = std::uint64_t{1} << v;
  max_independent_set(adj, candidates & ~bit & ~adj[v], chosen | bit, best_set, best_size);
  max_independent_set(adj, candidates & ~bit, chosen, best_set, best_size);
}

}  // namespace

ConflictFreeMaximum max_conflict_free_bruteforce(std::size_t n) {
  if (n < 1 || n > 4) {
    throw Error(ErrorCode::kTooLarge, "exhaustive search supports lengths 1..4");
  }
  // Key: bitmask of positions holding 1.
  std::map<std::uint32_t, std::vector<TernaryString>> groups;
  for (auto& s : all_ternary_strings(n)) {
    std::uint32_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i] == 1) ones |= 1u << i;
    }
    groups[ones].push_back(std::move(s));
  }

  ConflictFreeMaximum result;
  for (const auto& [ones, members] : groups) {
    const std::size_t m = members.size();
    std::vector<std::uint64_t> adj(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (conflict(members[i], members[j]).conflicts) {
          adj[i] |= std::uint64_t{1} << j;
          adj[j] |= std::uint64_t{1} << i;
        }
      }
    }
    std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    std::uint64_t best_set = 0;
    int best_size = -1;
    max_independent_set(adj, all, 0, best_set, best_size);
    for (std::size_t i = 0; i < m; ++i) {
      if (best_set >> i & 1) result.witness.push_back(members[i]);
    }
  }
  std::sort(result.witness.begin(), result.witness.end());
  result.size = result.witness.size();
  return result;
}

}  // namespace metricdim
