#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cnull {

/// Failure categories raised by the library. The command-line tool maps
/// them onto exit codes (see exit_code_for).
enum class ErrorKind {
  InvalidArgument,
  VariableCountMismatch,
  LengthMismatch,
  NotDivisible,
  GridMalformed,
  InconsistentSamples,
  PrecisionExhausted,
  NonZeroDimensional,
  NoReconstruction,
  NonReal,
  SchemaError,
  GeneratorNotAnnihilated,
  NotCAlgebraic,
  MissingParametrization,
  Unsupported,
  DegenerateSlice,
  InconsistentFiberCounts,
  NotProper,
  NotIsolated,
  CriticalSampleBudgetExhausted,
  ExactVerificationFailed,
  NonMonicizable,
  NotInIdeal,
  VanishingHypothesisFailed,
  NotStrictlyRegular,
  CycleDataUnavailable,
  NoSolutionWithinCap,
  ComponentNotInFiber,
  DivisionByZeroGradient,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cnull
