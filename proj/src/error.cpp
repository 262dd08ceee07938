#include "ncqm/error.hpp"

namespace ncqm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDeformation: return "InvalidDeformation";
    case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::MarginTooLarge: return "MarginTooLarge";
    case ErrorCode::QuadratureTooCoarse: return "QuadratureTooCoarse";
    case ErrorCode::InvalidRegime: return "InvalidRegime";
    case ErrorCode::NonPositiveKinetic: return "NonPositiveKinetic";
    case ErrorCode::ComplexFrequency: return "ComplexFrequency";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::SingularChain: return "SingularChain";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::BoundaryLeak: return "BoundaryLeak";
    case ErrorCode::ImaginaryLeak: return "ImaginaryLeak";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ncqm
