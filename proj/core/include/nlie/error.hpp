#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nlie {

/// Every failure raised by the library carries one of these codes so that
/// callers (the CLI in particular) can map them onto exit statuses.
enum class ErrorCode {
  NonPrimeCharacteristic,
  DegreeUnsupported,
  RationalsNotExtendable,
  RationalsUnsupported,
  NeedsAlgebraicNumbers,
  ZeroPolynomial,
  DivisionByZero,
  FieldMismatch,
  ScalarSyntax,
  DimensionMismatch,
  NonSquare,
  NotCommuting,
  ExtensionBudgetExceeded,
  AlreadyFull,
  ArityMismatch,
  InvalidAlgebra,
  NotAbelian,
  BudgetExceeded,
  CartanCheckFailed,
  PreconditionUnmet,
  Contradiction,
  TooLarge,
  NotFound,
  ParseError,
  IndexOutOfRange,
  DuplicateBracket,
  UnknownFixture,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nlie
