#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crashlab {

enum class ErrorCode {
  kMalformedNetwork,
  kCyclicGraph,
  kMultipleSources,
  kMultipleSinks,
  kUnreachableNode,
  kBadEdgeBounds,
  kBadCostSchedule,
  kPlanOutOfBounds,
  kNotCrashable,
  kNotKCrashing,
  kConvexNotSupported,
  kScriptNotIncreasing,
  kScriptNotMaximal,
  kBudgetExceeded,
  kNoPlan,
  kParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the greedy when the network cannot be shortened any further.
// `iteration` is 1-based; 0 means the failure was detected before any step.
class NotCrashableError : public Error {
 public:
  NotCrashableError(int iteration, const std::string& message)
      : Error(ErrorCode::kNotCrashable, message), iteration_(iteration) {}

  int iteration() const noexcept { return iteration_; }

 private:
  int iteration_;
};

class ScriptNotMaximalError : public Error {
 public:
  ScriptNotMaximalError(int round, std::size_t scripted_length,
                        std::size_t lis_length)
      : Error(ErrorCode::kScriptNotMaximal,
              "round " + std::to_string(round) + " scripts a subsequence of length " +
                  std::to_string(scripted_length) + " but the residue has an LIS of length " +
                  std::to_string(lis_length)),
        round_(round),
        lis_length_(lis_length) {}

  int round() const noexcept { return round_; }
  std::size_t lis_length() const noexcept { return lis_length_; }

 private:
  int round_;
  std::size_t lis_length_;
};

}  // namespace crashlab
