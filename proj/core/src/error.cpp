#include "cnull/error.hpp"

namespace cnull {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::VariableCountMismatch: return "VariableCountMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::GridMalformed: return "GridMalformed";
    case ErrorKind::InconsistentSamples: return "InconsistentSamples";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NonZeroDimensional: return "NonZeroDimensional";
    case ErrorKind::NoReconstruction: return "NoReconstruction";
    case ErrorKind::NonReal: return "NonReal";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::GeneratorNotAnnihilated: return "GeneratorNotAnnihilated";
    case ErrorKind::NotCAlgebraic: return "NotCAlgebraic";
    case ErrorKind::MissingParametrization: return "MissingParametrization";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::DegenerateSlice: return "DegenerateSlice";
    case ErrorKind::InconsistentFiberCounts: return "InconsistentFiberCounts";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::CriticalSampleBudgetExhausted: return "CriticalSampleBudgetExhausted";
    case ErrorKind::ExactVerificationFailed: return "ExactVerificationFailed";
    case ErrorKind::NonMonicizable: return "NonMonicizable";
    case ErrorKind::NotInIdeal: return "NotInIdeal";
    case ErrorKind::VanishingHypothesisFailed: return "VanishingHypothesisFailed";
    case ErrorKind::NotStrictlyRegular: return "NotStrictlyRegular";
    case ErrorKind::CycleDataUnavailable: return "CycleDataUnavailable";
    case ErrorKind::NoSolutionWithinCap: return "NoSolutionWithinCap";
    case ErrorKind::ComponentNotInFiber: return "ComponentNotInFiber";
    case ErrorKind::DivisionByZeroGradient: return "DivisionByZeroGradient";
  }
  return "Unknown";
}

}  // namespace cnull
