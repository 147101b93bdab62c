#include "chatelet/errors.hpp"

namespace chatelet {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenPrime: return "EvenPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::ZeroEpsilon: return "ZeroEpsilon";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotEisenstein: return "NotEisenstein";
    case Errc::UnsupportedTower: return "UnsupportedTower";
    case Errc::SplitExtension: return "SplitExtension";
    case Errc::NotRamified: return "NotRamified";
    case Errc::NotANorm: return "NotANorm";
    case Errc::NoExactWitness: return "NoExactWitness";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::DegenerateParameters: return "DegenerateParameters";
    case Errc::SplitSurface: return "SplitSurface";
    case Errc::NotInFiberImage: return "NotInFiberImage";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace chatelet
