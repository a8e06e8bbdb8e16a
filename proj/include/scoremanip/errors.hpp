#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace scoremanip {

using BigInt = boost::multiprecision::cpp_int;

enum class ErrorKind {
  NonPermutationOrder,
  NonPositiveWeight,
  CandidateOutOfRange,
  NonMonotoneAlpha,
  EmptyScoringVector,
  DimensionMismatch,
  NonPositiveScale,
  NotHard,
  UnsupportedM,
  ExplicitFamilyUnsupported,
  WrongClass,
  CapExhausted,
  OddSum,
  InvalidParameters,
  IndexOutOfRange,
  NotAWinner,
  Parse,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPermutationOrder: return "NonPermutationOrder";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::CandidateOutOfRange: return "CandidateOutOfRange";
    case ErrorKind::NonMonotoneAlpha: return "NonMonotoneAlpha";
    case ErrorKind::EmptyScoringVector: return "EmptyScoringVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonPositiveScale: return "NonPositiveScale";
    case ErrorKind::NotHard: return "NotHard";
    case ErrorKind::UnsupportedM: return "UnsupportedM";
    case ErrorKind::ExplicitFamilyUnsupported: return "ExplicitFamilyUnsupported";
    case ErrorKind::WrongClass: return "WrongClass";
    case ErrorKind::CapExhausted: return "CapExhausted";
    case ErrorKind::OddSum: return "OddSum";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotAWinner: return "NotAWinner";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Unknown";
}

/// Base error for every failure raised by the library. The kind is the
/// machine-readable part; what() carries a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the exhaustive solver when the leaf budget runs out before the
/// search space is covered.
class CapExhaustedError : public Error {
 public:
  CapExhaustedError(std::uint64_t cap, BigInt bound)
      : Error(ErrorKind::CapExhausted,
              "node cap " + std::to_string(cap) + " exhausted; full search space is " +
                  bound.str() + " leaves"),
        cap_(cap),
        bound_(std::move(bound)) {}

  std::uint64_t cap() const noexcept { return cap_; }
  const BigInt& bound() const noexcept { return bound_; }

 private:
  std::uint64_t cap_;
  BigInt bound_;
};

}  // namespace scoremanip
