#pragma once

#include <stdexcept>
#include <string>

namespace rkgeo {

/// Failure categories shared by all modules. Every throwing operation
/// documents which codes it can raise.
enum class ErrorCode {
  NotHermitian,
  NotUnitary,
  NoConvergence,
  BranchAmbiguity,
  TooLarge,
  DegreeZero,
  OutOfDomain,
  SeriesDivergence,
  ZeroKernel,
  SetsIntersect,
  CardinalityMismatch,
  LinearlyDependentKernels,
  SingularSum,
  IllConditioned,
  InsufficientInteriorRoots,
  NoInteriorRoot,
  DegenerateQuadratic,
  ZeroDenominator,
  PoleOnBoundaryNumerics,
  GridTooCoarse,
  ZeroOnContour,
  AlphaDegenerate,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace rkgeo
