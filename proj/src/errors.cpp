#include "lindex/errors.hpp"

namespace lindex {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CollinearInput: return "CollinearInput";
    case ErrorCode::InvalidBasis: return "InvalidBasis";
    case ErrorCode::InvalidSystem: return "InvalidSystem";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::UnsupportedTermCount: return "UnsupportedTermCount";
    case ErrorCode::NotExchangeCandidate: return "NotExchangeCandidate";
    case ErrorCode::CollinearSpan: return "CollinearSpan";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::NegativeRate: return "NegativeRate";
    case ErrorCode::SingularGenerator: return "SingularGenerator";
    case ErrorCode::PureState: return "PureState";
    case ErrorCode::RankDeficientBasis: return "RankDeficientBasis";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace lindex
