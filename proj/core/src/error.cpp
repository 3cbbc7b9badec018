#include "tropmirror/error.hpp"

namespace tropmirror {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::MalformedFan: return "MalformedFan";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::EmptyPolytope: return "EmptyPolytope";
    case ErrorCode::LowerDimensional: return "LowerDimensional";
    case ErrorCode::DegenerateSupport: return "DegenerateSupport";
    case ErrorCode::NotTriangulation: return "NotTriangulation";
    case ErrorCode::InvalidEps: return "InvalidEps";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::CriticalPoint: return "CriticalPoint";
    case ErrorCode::NotOnZeroLocus: return "NotOnZeroLocus";
    case ErrorCode::AssociativityViolation: return "AssociativityViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace tropmirror
