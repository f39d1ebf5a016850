#pragma once

#include <stdexcept>
#include <string>

namespace spwb {

// Failure identities surfaced by the library. Callers match on the code.
enum class Err {
  NotPrime,
  NotAUnit,
  NotSquare,
  NotSkew,
  OddSize,
  NotAComplex,
  NotBasisUnit,
  DegreeBound,
  NotDefinedAt,
  LimitUndefined,
  RankOrder,
  NotOddSymplectic,
  NotSymplectic,
  CapExceeded,
  NotNondegenerate,
  RankBound,
  InputNotNondegenerate,
  IncompatibleCoefficients,
  ConfigError,
  SizeMismatch,
  Overflow,
  Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what);
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] void fail(Err code, const std::string& what);

}  // namespace spwb
