#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace speh {

enum class ErrorCode {
  ParseError,
  MixedHalos,
  MixedGroups,
  MixedRings,
  ZeroDenominator,
  IdentityElement,
  UnsupportedPlace,
  UnsupportedPair,
  DomainMismatch,
  NotRepresentable,
  Inconclusive,
  InsufficientFilterDepth,
  NotNonArchimedean,
  ReducibleModulus,
  FactorizationRequired,
  RangeError,
  UnrecognizedDomainShape,
  NotIntegral,
  InvalidTarget,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. Parse errors map to CLI exit code 1,
/// everything else to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace speh
