#ifndef HPD_ERROR_HPP
#define HPD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hpd {

enum class Err {
  NonPrimeCharacteristic,
  ReducibleModulus,
  DivisionByZero,
  FieldMismatch,
  ZeroElement,
  AmbientMismatch,
  ShapeMismatch,
  ZeroRankSubspace,
  RankOutOfRange,
  NonPolynomialScheme,
  InvalidScheme,
  ZeroPolynomial,
  UnequalIndexSums,
  IdenticalTuples,
  BudgetExceeded,
  HypothesisViolated,
  BaseCaseBudgetExceeded,
  ParameterOutOfRange,
  LengthMismatch,
  MonotonicityViolation,
  ZeroDeterminant,
  Parse,
  Internal,
};

const char* err_name(Err e) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Err code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Err code() const noexcept { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace hpd

#endif
