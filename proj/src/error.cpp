#include "fbrooks/error.hpp"

namespace fbrooks {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kSizeOutOfRange: return "size-out-of-range";
    case ErrorCode::kInvalidVertex: return "invalid-vertex";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kResourceLimit: return "resource-limit";
    case ErrorCode::kNotFound: return "not-found";
    case ErrorCode::kNotConnected: return "not-connected";
    case ErrorCode::kNotVertexTransitive: return "not-vertex-transitive";
    case ErrorCode::kHypothesisViolation: return "hypothesis-violation";
    case ErrorCode::kNotASeparator: return "not-a-separator";
    case ErrorCode::kSelectionsMissing: return "selections-missing";
    case ErrorCode::kNoValidSelection: return "no-valid-selection";
    case ErrorCode::kClassInvalid: return "class-invalid";
    case ErrorCode::kNotFourColorable: return "not-4-colorable";
    case ErrorCode::kAssemblyConflict: return "assembly-conflict";
    case ErrorCode::kInputViolation: return "input-violation";
    case ErrorCode::kInvariantViolation: return "invariant-violation";
  }
  return "unknown";
}

}  // namespace fbrooks
