#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdlat {

enum class ErrorCode {
  // group construction
  NotAssociative,
  NoIdentityAtZero,
  NotLatinSquare,
  MalformedTable,
  PointOutOfRange,
  MalformedCycle,
  OrderCapExceeded,
  UnknownCatalogName,
  // subgroup operations
  IndexOutOfRange,
  ParentMismatch,
  NotASubgroup,
  NotNested,
  EnumerationBudgetExceeded,
  // central products
  NotCentral,
  NotIsomorphism,
  NotCentralDecomposition,
  // theorem checks
  PreconditionFailed,
  // internal consistency failures; seeing one of these means a bug
  GradednessViolation,
  LatticeViolation,
  // file formats
  InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cdlat
