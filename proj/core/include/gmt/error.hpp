#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gmt {

// Every precondition failure in the library carries one of these codes; the
// CLI maps them to exit statuses and machine-readable error documents.
enum class ErrorCode {
  GroupMismatch,
  RankTooLarge,
  NotFinitelyGenerated,
  DimensionMismatch,
  DegreeError,
  ZeroVector,
  NotSimple,
  FiberMismatch,
  RankCollapse,
  CorankCollapse,
  InvalidComplex,
  CarrierMismatch,
  DimensionZero,
  NonRegularValue,
  OverlayUnsupported,
  NotManifold,
  NotConnected,
  Infeasible,
  SolverStall,
  TooLarge,
  ParseError,
  InvalidArgument,
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

}  // namespace gmt
