/// @file error.hpp
/// @brief Error codes and the exception type thrown by every nilforge module.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilforge {

enum class ErrorCode {
  NotSymmetric,
  DimMismatch,
  UnsupportedSignature,
  DegenerateForm,
  NotSkew,
  DegenerateRestriction,
  Precondition,
  NotAdapted,
  Dim,
  DegenerateW,
  Homomorphism,
  SingularA,
  NotClosed,
  Signature,
  NotAntisymmetric,
  NotIndependent,
  NotInSo,
  Parse,
};

/// Stable identifier used in JSON error reports, e.g. "ERR_NOT_SYMMETRIC".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace nilforge
