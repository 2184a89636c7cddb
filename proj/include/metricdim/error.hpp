#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace metricdim {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidLabel,
  kSelfLoop,
  kUnknownVertex,
  kEdgeExists,
  kEdgeMissing,
  kLabelCollision,
  kParse,
  kEmptyLandmarks,
  kDisconnected,
  kDisconnectsGraph,
  kExceeded,
  kBudget,
  kNotResolving,
  kBlockOverlap,
  kWindowTooSmall,
  kEmptyWitness,
  kConflictingStrings,
  kLengthMismatch,
  kEqualStrings,
  kNotARamp,
  kTooLarge,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` is stable,
// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace metricdim
