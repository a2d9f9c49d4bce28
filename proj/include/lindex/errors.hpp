#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lindex {

enum class ErrorCode {
  CollinearInput,
  InvalidBasis,
  InvalidSystem,
  NotUnitary,
  ZeroScale,
  UnsupportedTermCount,
  NotExchangeCandidate,
  CollinearSpan,
  NotInSpan,
  NegativeRate,
  SingularGenerator,
  PureState,
  RankDeficientBasis,
  DegenerateDenominator,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Domain failure raised by every lindex operation. `code()` identifies the
/// contract that was violated; `what()` carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lindex
