#include "tors/error.hpp"

namespace tors {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotPresilting: return "NotPresilting";
    case ErrorCode::NotSilting: return "NotSilting";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ConeNotTwoTerm: return "ConeNotTwoTerm";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::SearchSpaceExceeded: return "SearchSpaceExceeded";
    case ErrorCode::NotRepFiniteWithinBound: return "NotRepFiniteWithinBound";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace tors
