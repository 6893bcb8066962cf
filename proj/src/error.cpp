#include "ntdice/error.hpp"

namespace ntdice {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::WrongResidueClass: return "WrongResidueClass";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SideCountMismatch: return "SideCountMismatch";
    case ErrorCode::DuplicateLabelAcrossDice: return "DuplicateLabelAcrossDice";
    case ErrorCode::TieDetected: return "TieDetected";
  }
  return "Unknown";
}

}  // namespace ntdice
