#include "fuchs/error.hpp"

namespace fuchs {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoSuchRoot: return "NoSuchRoot";
    case ErrorKind::OrderExceedsCap: return "OrderExceedsCap";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::IncompatibleGenerators: return "IncompatibleGenerators";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::PrimeSearchFailed: return "PrimeSearchFailed";
    case ErrorKind::SplitFailed: return "SplitFailed";
    case ErrorKind::NonIntegralIndicator: return "NonIntegralIndicator";
    case ErrorKind::SignatureInvalid: return "SignatureInvalid";
    case ErrorKind::BoundOverflow: return "BoundOverflow";
    case ErrorKind::TooExpensive: return "TooExpensive";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::Inadmissible: return "Inadmissible";
    case ErrorKind::DeterminantUnfixable: return "DeterminantUnfixable";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CacheError: return "CacheError";
  }
  return "Unknown";
}

}  // namespace fuchs
