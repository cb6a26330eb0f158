#pragma once

#include <stdexcept>
#include <string>

namespace relucrit {

enum class ErrorCode {
  ZeroVector = 1,
  DomainError,
  DimensionMismatch,
  NotInFixedSpace,
  NotAdmissible,
  UnsupportedChart,
  SizeLimit,
  NoConvergence,
  SingularJacobian,
  NotConsistent,
  SingularJStar,
  InconsistentSystem,
  UnknownFamily,
  BadInput,
  IoError,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace relucrit
