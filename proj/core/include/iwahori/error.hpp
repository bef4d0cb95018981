#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iwahori {

enum class ErrorCode {
  InvalidDatum,
  NonDominantInput,
  DatumMismatch,
  EmptyRootSystem,
  InfiniteWJ,
  NonSigmaStableJ,
  IncompatibleTwist,
  IncompatibleQuotient,
  NoStep,
  NonDominantResult,
  ConstraintViolated,
  NotInLoopGroup,
  LiftNotFound,
  ZeroDenominator,
  UnsupportedKind,
  Precondition,
  Parse,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace iwahori
