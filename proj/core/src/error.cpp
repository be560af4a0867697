#include "nlie/error.hpp"

namespace nlie {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::DegreeUnsupported: return "DegreeUnsupported";
    case ErrorCode::RationalsNotExtendable: return "RationalsNotExtendable";
    case ErrorCode::RationalsUnsupported: return "RationalsUnsupported";
    case ErrorCode::NeedsAlgebraicNumbers: return "NeedsAlgebraicNumbers";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ScalarSyntax: return "ScalarSyntax";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::ExtensionBudgetExceeded: return "ExtensionBudgetExceeded";
    case ErrorCode::AlreadyFull: return "AlreadyFull";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CartanCheckFailed: return "CartanCheckFailed";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::Contradiction: return "Contradiction";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateBracket: return "DuplicateBracket";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

}  // namespace nlie
