#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cnull/numeric.hpp"
#include "cnull/variety.hpp"

namespace cnull {

/// One point x of a fibre f⁻¹(y) together with the parameter values s with
/// φ(s) = x that produced it.
struct FiberPoint {
  CPoint point;
  std::vector<CPoint> params;
};

/// The (set-theoretic) fibre f⁻¹(y) ⊂ A, computed along the parametrization.
struct Fiber {
  std::vector<FiberPoint> points;
  unsigned prec = kDefaultPrecision;
};

/// Fibre over a rational point y ∈ C^n. Supported shapes: k = 1 with any n
/// (common roots of f_i∘φ − y_i via an exact gcd), and k = n = 2 (resultant
/// system solving). Throws Error{NotProper} if the fibre is not finite.
Fiber compute_fiber(const CAMap& f, std::span<const Rat> y, unsigned prec = kDefaultPrecision);

/// Evidence that f is proper along the parametrization.
struct ProperWitness {
  bool proper = false;
  std::string evidence;
};

/// Growth criterion along φ. For k = 1: some f_i∘φ is non-constant. For
/// k = n = 2: both f_i∘φ are non-constant and their top-degree forms have no
/// common zero besides the origin. Never throws for supported shapes.
ProperWitness properness_witness(const CAMap& f);

/// Number of distinct points in f⁻¹(y).
std::size_t fiber_count_at(const CAMap& f, std::span<const Rat> y, unsigned prec = kDefaultPrecision);

/// Geometric degree d(f): the common fibre cardinality over five random
/// generic points of f(A) (random y when n = k, images f(φ(s)) of random
/// parameters when n > k). Redraws up to five times before throwing
/// Error{InconsistentFiberCounts}; throws Error{NotProper}.
std::size_t geometric_degree(const CAMap& f, std::uint64_t seed, unsigned prec = kDefaultPrecision);

/// Growth exponent B(g) = deg(g∘φ) / max_i deg φ_i (0 for constant g).
Rat growth_exponent(const CAMap& g);

/// Local multiplicities of the points of f⁻¹(y0) (k = n case), obtained by
/// counting the solutions of f∘φ = y0 + ε·v that stay near each fibre point,
/// ε = 2^(-prec/8)·scale, for three random directions v which must agree.
/// Throws Error{NotIsolated} if the fibre over y0 is not finite and
/// Error{PrecisionExhausted} if the counts are unstable.
struct LocalMultiplicity {
  FiberPoint point;
  int multiplicity = 0;
};
std::vector<LocalMultiplicity> local_multiplicities(const CAMap& f, std::span<const Rat> y0, std::uint64_t seed,
                                                    unsigned prec = kDefaultPrecision);

/// Value f(a) at a rational point a ∈ A, using the continuous extension along
/// the parametrization where the rational expression is indeterminate.
std::vector<Rat> value_at(const CAMap& f, std::span<const Rat> a);

/// m_a(f) at a rational point a ∈ A.
int local_multiplicity(const CAMap& f, std::span<const Rat> a, std::uint64_t seed,
                       unsigned prec = kDefaultPrecision);

struct StollCheck {
  std::size_t lhs = 0;  // d(f)
  std::size_t rhs = 0;  // sum of local multiplicities over f⁻¹(y0)
  bool ok = false;
};

/// d(f) = Σ_{a ∈ f⁻¹(y0)} m_a(f), for k = n.
StollCheck stoll_check(const CAMap& f, std::span<const Rat> y0, std::uint64_t seed = 0,
                       unsigned prec = kDefaultPrecision);

/// deg f(A) by slicing the parametrized image s ↦ f(φ(s)). Equals 1 when n = k.
std::size_t image_degree(const CAMap& f, std::uint64_t seed, unsigned prec = kDefaultPrecision);

/// deg Γ_f by slicing the parametrized graph s ↦ (φ(s), f(φ(s))).
std::size_t graph_degree(const CAMap& f, std::uint64_t seed, unsigned prec = kDefaultPrecision);

struct ProperMapProfile {
  std::size_t d_f = 0;
  std::size_t graph_degree = 0;
  std::optional<std::size_t> image_degree;
  ProperWitness witness;
};

/// All invariants above in one pass; throws Error{NotProper}.
ProperMapProfile profile(const CAMap& f, std::uint64_t seed, unsigned prec = kDefaultPrecision,
                         bool with_image_degree = true);

}  // namespace cnull
