#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuchs {

enum class ErrorKind {
  NotPrime,
  TooLarge,
  NoSuchRoot,
  OrderExceedsCap,
  Singular,
  CapExceeded,
  IncompatibleGenerators,
  UnsupportedFamily,
  NotAMember,
  PrimeSearchFailed,
  SplitFailed,
  NonIntegralIndicator,
  SignatureInvalid,
  BoundOverflow,
  TooExpensive,
  InvalidType,
  Mismatch,
  UnknownLabel,
  Inadmissible,
  DeterminantUnfixable,
  OutOfRange,
  HypothesisFailed,
  ParseError,
  CacheError,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace fuchs
