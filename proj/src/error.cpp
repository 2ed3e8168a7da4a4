#include "holokrein/error.hpp"

namespace holokrein {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IncompatibleAlgebras: return "IncompatibleAlgebras";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::SingularTransformation: return "SingularTransformation";
    case ErrorCode::AliasingRisk: return "AliasingRisk";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NullSubrepresentation: return "NullSubrepresentation";
    case ErrorCode::NotRegularizable: return "NotRegularizable";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace holokrein
