#include "nilforge/error.hpp"

namespace nilforge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "ERR_NOT_SYMMETRIC";
    case ErrorCode::DimMismatch: return "ERR_DIM_MISMATCH";
    case ErrorCode::UnsupportedSignature: return "ERR_UNSUPPORTED_SIGNATURE";
    case ErrorCode::DegenerateForm: return "ERR_DEGENERATE_FORM";
    case ErrorCode::NotSkew: return "ERR_NOT_SKEW";
    case ErrorCode::DegenerateRestriction: return "ERR_DEGENERATE_RESTRICTION";
    case ErrorCode::Precondition: return "ERR_PRECONDITION";
    case ErrorCode::NotAdapted: return "ERR_NOT_ADAPTED";
    case ErrorCode::Dim: return "ERR_DIM";
    case ErrorCode::DegenerateW: return "ERR_DEGENERATE_W";
    case ErrorCode::Homomorphism: return "ERR_HOMOMORPHISM";
    case ErrorCode::SingularA: return "ERR_SINGULAR_A";
    case ErrorCode::NotClosed: return "ERR_NOT_CLOSED";
    case ErrorCode::Signature: return "ERR_SIGNATURE";
    case ErrorCode::NotAntisymmetric: return "ERR_NOT_ANTISYMMETRIC";
    case ErrorCode::NotIndependent: return "ERR_NOT_INDEPENDENT";
    case ErrorCode::NotInSo: return "ERR_NOT_IN_SO";
    case ErrorCode::Parse: return "ERR_PARSE";
  }
  return "ERR_UNKNOWN";
}

}  // namespace nilforge
