#pragma once

#include <stdexcept>
#include <string>

namespace framecoh {

enum class ErrorCode {
  NotHermitian,
  TraceNotOne,
  NotPositive,
  BadWeights,
  NotOrthonormal,
  DimMismatch,
  LengthMismatch,
  NotTight,
  NotBasis,
  NotUnitary,
  BadCount,
  BadParameter,
  BadDimension,
  BadKappa,
  NoConvergence,
  IndexOutOfRange,
  NotRankOne,
  ZeroProbability,
  UnknownName,
  InvalidParameters,
  IoError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace framecoh
