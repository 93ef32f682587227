#pragma once

#include <stdexcept>
#include <string>

namespace laguerre3 {

// Reason codes for domain-level failures. The CLI maps these to exit code 2,
// as opposed to I/O failures (exit code 1).
enum class Err {
  NotAUnit,
  NotAPoint,
  NotMutuallyDistant,
  SingularMatrix,
  InvalidCoefficients,
  InternalInconsistency,
  BothZero,
  NotFlagPreserving,
  NotATypeMatrix,
  WrongType,
  NoSolution,
  DegenerateSelection,
  AtInfinity,
  ZeroDirection,
  NotAParabola,
  NotACubic,
  NotParabolas,
  NotCubics,
  KindMismatch,
  ZeroA,
  InvalidSpec,
  BadInput,
};

class DomainError : public std::runtime_error {
 public:
  DomainError(Err code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace laguerre3
