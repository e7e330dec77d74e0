#include "cacap/error.hpp"

namespace cacap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EdgeInTwoCycles: return "EdgeInTwoCycles";
    case ErrorCode::DegenerateCycle: return "DegenerateCycle";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InvalidLink: return "InvalidLink";
    case ErrorCode::UnknownLinkId: return "UnknownLinkId";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotATwoCut: return "NotATwoCut";
    case ErrorCode::NotLeafToLeaf: return "NotLeafToLeaf";
    case ErrorCode::NotLeafToLeafPlus: return "NotLeafToLeafPlus";
    case ErrorCode::InfeasibleInstance: return "InfeasibleInstance";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SubcactusTooLarge: return "SubcactusTooLarge";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::BoundViolation: return "BoundViolation";
  }
  return "Unknown";
}

}  // namespace cacap
