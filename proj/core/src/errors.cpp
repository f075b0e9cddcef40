#include "crashlab/errors.hpp"

namespace crashlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedNetwork: return "MalformedNetwork";
    case ErrorCode::kCyclicGraph: return "CyclicGraph";
    case ErrorCode::kMultipleSources: return "MultipleSources";
    case ErrorCode::kMultipleSinks: return "MultipleSinks";
    case ErrorCode::kUnreachableNode: return "UnreachableNode";
    case ErrorCode::kBadEdgeBounds: return "BadEdgeBounds";
    case ErrorCode::kBadCostSchedule: return "BadCostSchedule";
    case ErrorCode::kPlanOutOfBounds: return "PlanOutOfBounds";
    case ErrorCode::kNotCrashable: return "NotCrashable";
    case ErrorCode::kNotKCrashing: return "NotKCrashing";
    case ErrorCode::kConvexNotSupported: return "ConvexNotSupported";
    case ErrorCode::kScriptNotIncreasing: return "ScriptNotIncreasing";
    case ErrorCode::kScriptNotMaximal: return "ScriptNotMaximal";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNoPlan: return "NoPlan";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace crashlab
