#include "spwb/error.hpp"

namespace spwb {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotPrime: return "NotPrime";
    case Err::NotAUnit: return "NotAUnit";
    case Err::NotSquare: return "NotSquare";
    case Err::NotSkew: return "NotSkew";
    case Err::OddSize: return "OddSize";
    case Err::NotAComplex: return "NotAComplex";
    case Err::NotBasisUnit: return "NotBasisUnit";
    case Err::DegreeBound: return "DegreeBound";
    case Err::NotDefinedAt: return "NotDefinedAt";
    case Err::LimitUndefined: return "LimitUndefined";
    case Err::RankOrder: return "RankOrder";
    case Err::NotOddSymplectic: return "NotOddSymplectic";
    case Err::NotSymplectic: return "NotSymplectic";
    case Err::CapExceeded: return "CapExceeded";
    case Err::NotNondegenerate: return "NotNondegenerate";
    case Err::RankBound: return "RankBound";
    case Err::InputNotNondegenerate: return "InputNotNondegenerate";
    case Err::IncompatibleCoefficients: return "IncompatibleCoefficients";
    case Err::ConfigError: return "ConfigError";
    case Err::SizeMismatch: return "SizeMismatch";
    case Err::Overflow: return "Overflow";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Err code, const std::string& what)
    : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace spwb
