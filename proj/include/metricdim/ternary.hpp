#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metricdim {

// Word over {0,1,2}. Orders lexicographically with 0 < 1 < 2.
class TernaryString {
 public:
  TernaryString() = default;
  explicit TernaryString(std::vector<std::uint8_t> digits);
  // Throws InvalidArgument on characters other than '0', '1', '2'.
  static TernaryString parse(std::string_view text);

  std::size_t size() const noexcept { return digits_.size(); }
  // Zero-based position.
  std::uint8_t operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
  std::string str() const;

  auto operator<=>(const TernaryString&) const = default;

 private:
  std::vector<std::uint8_t> digits_;
};

// Indices are zero-based string positions.
struct ConflictReport {
  bool conflicts = false;
  std::optional<std::size_t> shared_two_index;
  std::optional<std::size_t> violating_index;
};

// x and y conflict when some position holds 2 in both and every position
// where they differ holds {0, 2}. Throws LengthMismatch, EqualStrings.
ConflictReport conflict(const TernaryString& x, const TernaryString& y);

// Throws LengthMismatch, EqualStrings (on duplicates).
bool is_conflict_free(std::span<const TernaryString> strings);
// First conflicting pair in input order, if any.
std::optional<std::pair<TernaryString, TernaryString>> find_conflict(
    std::span<const TernaryString> strings);

// Every length-n string with at most one 2, sorted. Size 2^n + n 2^(n-1).
std::vector<TernaryString> canonical_conflict_free(std::size_t n);

// 2^n + n 2^(n-1).
std::uint64_t conflict_free_lower_bound(std::size_t n);

struct ConflictFreeMaximum {
  std::size_t size = 0;
  std::vector<TernaryString> witness;  // sorted
};

// Exact largest conflict-free subset of T_n for 1 <= n <= 4. Strings are
// grouped by the positions of their 1s (no conflict crosses groups); each
// group is solved by exhaustive maximum independent set search.
// Throws TooLarge.
ConflictFreeMaximum max_conflict_free_bruteforce(std::size_t n);

// All 3^n strings in sorted order.
std::vector<TernaryString> all_ternary_strings(std::size_t n);

}  // namespace metricdim
