#include "error.hpp"

namespace hpd {

const char* err_name(Err e) noexcept {
  switch (e) {
    case Err::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Err::ReducibleModulus: return "ReducibleModulus";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::ZeroElement: return "ZeroElement";
    case Err::AmbientMismatch: return "AmbientMismatch";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::ZeroRankSubspace: return "ZeroRankSubspace";
    case Err::RankOutOfRange: return "RankOutOfRange";
    case Err::NonPolynomialScheme: return "NonPolynomialScheme";
    case Err::InvalidScheme: return "InvalidScheme";
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::UnequalIndexSums: return "UnequalIndexSums";
    case Err::IdenticalTuples: return "IdenticalTuples";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::HypothesisViolated: return "HypothesisViolated";
    case Err::BaseCaseBudgetExceeded: return "BaseCaseBudgetExceeded";
    case Err::ParameterOutOfRange: return "ParameterOutOfRange";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::MonotonicityViolation: return "MonotonicityViolation";
    case Err::ZeroDeterminant: return "ZeroDeterminant";
    case Err::Parse: return "Parse";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace hpd
