#pragma once

#include <stdexcept>
#include <string>

namespace clusterlogit {

enum class ErrorCode {
  // data
  NonBinaryOutcome,
  SingleCluster,
  MissingColumn,
  MissingValue,
  NoConstantColumn,
  EmptyCluster,
  BadInput,
  // estimation
  Separation,
  NonConvergence,
  RankDeficient,
  SingularMatrix,
  SingularInformation,
  SingularHessian,
  SingularSubsampleInformation,
  TooManyDropped,
  NonPDAdjustment,
  UnsupportedRestriction,
  // tests and intervals
  SingularRVR,
  ZeroVariance,
  NonPositiveSE,
  TooFewReplications,
  RestrictedOrigin,
  // simulation
  NoRoot,
  // cli
  UsageError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace clusterlogit
