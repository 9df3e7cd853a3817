#include "relpoly/error.hpp"

namespace relpoly {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidRelation: return "InvalidRelation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::IncomparableEntries: return "IncomparableEntries";
    case ErrorCode::NotACPattern: return "NotACPattern";
    case ErrorCode::NegativeEntryOnSupport: return "NegativeEntryOnSupport";
    case ErrorCode::NonRationalWeight: return "NonRationalWeight";
    case ErrorCode::LabeledEntryUnsupported: return "LabeledEntryUnsupported";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::UnboundedWeightSlice: return "UnboundedWeightSlice";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::NotSatisfying: return "NotSatisfying";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::CriticalDenominator: return "CriticalDenominator";
    case ErrorCode::OutOfBasisLeak: return "OutOfBasisLeak";
    case ErrorCode::NotInBasis: return "NotInBasis";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotDominant: return "NotDominant";
  }
  return "Unknown";
}

}  // namespace relpoly
