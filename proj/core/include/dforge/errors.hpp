#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dforge {

/// Every domain failure raised by the library carries one of these codes.
enum class ErrorCode {
  DivisionByZero,
  ZeroIdeal,
  ZeroPolynomial,
  InvalidField,
  NotAField,
  FieldMismatch,
  InvalidAutomorphism,
  BothZero,
  BadConstantTerm,
  RankZero,
  NotRankTwo,
  UnsupportedField,
  CocycleViolation,
  NonCyclicGroup,
  NotIntertwining,
  Inseparable,
  InternalInconsistency,
  StructureError,
  DivisionInexact,
  ChainMismatch,
  NotPrimitive,
  NotCyclic,
  NotPrimePower,
  NotScalarConjugate,
  MissingCertificate,
  NotTreeMetric,
  NotGInvariant,
  AsymmetricMatrix,
  MissingIsogeny,
  OrbitNotClosed,
  NotRealizable,
  AmbientMismatch,
  DegreeMismatch,
  EvenCharacteristicUnsupported,
  NotGStable,
  NotAHomomorphism,
  InvalidArgument,
  Cancelled,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed textual input. `position` is a 0-based offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("at offset " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const char* what) {
  if (!condition) fail(code, what);
}

}  // namespace dforge
