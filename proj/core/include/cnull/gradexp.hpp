#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "cnull/numeric.hpp"
#include "cnull/polynomial.hpp"

namespace cnull {

/// Formal partial derivatives (∂f/∂x_1, ..., ∂f/∂x_m).
std::vector<MPoly> gradient(const MPoly& f);

struct GradProfile {
  std::size_t mu = 0;  // geometric degree of ∇f, counted with multiplicity
  std::size_t D = 0;   // degree of the graph of ∇f
};

/// μ and D for f in m <= 2 variables. μ sums the local multiplicities over
/// the fibre of a random generic y (three draws must agree); D slices the
/// graph x ↦ (x, ∇f(x)). Throws Error{NotProper} when ∇f has infinite
/// fibres and Error{PrecisionExhausted} when the counts are unstable.
GradProfile grad_profile(const MPoly& f, std::uint64_t seed, unsigned prec = kDefaultPrecision);

/// 1/(d(D − μ + 1)). Requires d >= 1 and D >= μ >= 1.
Rat theta(long d, long D, long mu);

struct ShellResult {
  double norm = 0.0;
  double max_ratio = 0.0;
};

struct ShellValidation {
  bool validated = false;
  double c = 0.0;  // largest ratio over all shells
  std::vector<ShellResult> shells;
};

inline const std::vector<double> kDefaultShells = {1e1, 1e2, 1e3, 1e4};

/// Samples real points with ‖x‖ equal to each shell norm and records the
/// largest |f(x)|^θ / ‖∇f(x)‖. Validated iff the top shell maximum is at
/// most twice the previous one. Points with vanishing gradient are redrawn,
/// up to ten times the sample count per shell, before
/// Error{DivisionByZeroGradient}.
ShellValidation validate_inequality(const MPoly& f, const Rat& theta_value, const std::vector<double>& shells,
                                    int samples_per_shell, std::uint64_t seed);

struct GradExpReport {
  int d = 0;
  GradProfile profile;
  Rat theta;
  ShellValidation validation;
};

GradExpReport gradexp_report(const MPoly& f, std::uint64_t seed, unsigned prec = kDefaultPrecision,
                             const std::vector<double>& shells = kDefaultShells, int samples_per_shell = 200);

nlohmann::json gradexp_to_json(const GradExpReport& r);

}  // namespace cnull
