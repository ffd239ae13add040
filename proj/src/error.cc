#include "framecoh/error.hpp"

namespace framecoh {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotTight: return "NotTight";
    case ErrorCode::NotBasis: return "NotBasis";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::BadCount: return "BadCount";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::BadKappa: return "BadKappa";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotRankOne: return "NotRankOne";
    case ErrorCode::ZeroProbability: return "ZeroProbability";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace framecoh
