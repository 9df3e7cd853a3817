#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace relpoly {

// Published error codes. The CLI reports these verbatim in its error JSON,
// so only append to this list.
enum class ErrorCode {
  InvalidArgument,
  InvalidRelation,
  DimensionMismatch,
  ParseError,
  IoError,
  IncomparableEntries,
  NotACPattern,
  NegativeEntryOnSupport,
  NonRationalWeight,
  LabeledEntryUnsupported,
  Unbounded,
  UnboundedWeightSlice,
  WeightMismatch,
  NotSatisfying,
  Infeasible,
  CriticalDenominator,
  OutOfBasisLeak,
  NotInBasis,
  NotAdmissible,
  NotDominant,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace relpoly
