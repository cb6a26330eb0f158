#include "relucrit/error.hpp"

namespace relucrit {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInFixedSpace: return "NotInFixedSpace";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::UnsupportedChart: return "UnsupportedChart";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SingularJacobian: return "SingularJacobian";
    case ErrorCode::NotConsistent: return "NotConsistent";
    case ErrorCode::SingularJStar: return "SingularJStar";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace relucrit
