#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cnull/numeric.hpp"
#include "cnull/polynomial.hpp"
#include "cnull/variety.hpp"

namespace cnull {

enum class CharPolyProvenance { Interpolated, Resultant };

/// Characteristic polynomial t^d + a_1(y) t^(d-1) + ... + a_d(y) of g
/// relative to a proper map f: A → C^k. Its roots over y are the values of g
/// on the fibre f⁻¹(y).
struct CharPoly {
  std::size_t d = 0;
  std::size_t var_count = 1;      // k, number of y variables
  std::vector<MPoly> coeffs;      // a_1..a_d, each in var_count variables
  std::vector<int> bounds;        // degree bound per coefficient; empty for the oracle
  CharPolyProvenance provenance = CharPolyProvenance::Interpolated;
  bool verified = false;

  /// P as a polynomial in (y_1..y_k, t), t last.
  MPoly as_polynomial() const;
};

std::string to_string(CharPolyProvenance p);

struct CharPolyOptions {
  unsigned prec = kDefaultPrecision;
  /// Explicit interpolation nodes per y variable. When empty, nodes are
  /// distinct random integers in [-100, 100] drawn from the seed.
  std::vector<std::vector<Rat>> grid_nodes;
};

/// Degree bound floor(j · B(g) · (deg Γ_f − d(f) + 1)) for j = 1..d.
std::vector<int> coefficient_bounds(std::size_t d, const Rat& growth, std::size_t graph_degree);

/// Builds P_g by solving fibres over a non-critical grid, forming signed
/// elementary symmetric functions of the g-values, reconstructing them as
/// rationals and interpolating under the degree bounds. The result is then
/// verified exactly: P(f∘φ, g∘φ) must vanish identically.
///
/// Requires f with k components (k = 1, or k = 2 on a 2-parameter domain).
/// Precision escalates along the ladder on reconstruction or verification
/// failure. Throws Error{CriticalSampleBudgetExhausted},
/// Error{NoReconstruction} or Error{ExactVerificationFailed}.
CharPoly build_charpoly(const CAMap& f, const CAMap& g, std::uint64_t seed, const CharPolyOptions& opts = {});

/// Independent construction Res_t(f∘φ(t) − y, s − g∘φ(t)), normalised monic
/// in s (k = 1). Throws Error{NonMonicizable} when f∘φ is constant or the
/// leading coefficient in s depends on y.
CharPoly charpoly_resultant_oracle(const CAMap& f, const CAMap& g);

/// max_j deg(a_j)/j over nonzero a_j; 0 if all a_j vanish.
Rat ploski_delta(const CharPoly& p);

struct GrowthCheck {
  bool holds = false;
  /// Fitted constant: max |t| / |x|^q over the samples.
  double c = 0.0;
  /// Growth of log(|t|/|x|^q) per unit of log|x| between the lowest and
  /// highest decade of sample norms.
  double excess_slope = 0.0;
  /// Sample attaining the maximal ratio.
  std::vector<double> witness_x;
  double witness_t = 0.0;
};

/// Tests {P(x,t) = 0, |x| >= R} ⊂ {|t| <= C|x|^q} on real rational samples
/// with |x| = R·10^(4u), u uniform in [0, 1). The inclusion holds when the
/// ratio |t|/|x|^q does not grow across the four decades: the excess slope
/// must stay below q/16.
GrowthCheck growth_inclusion_check(const CharPoly& p, const Rat& q, double radius, int samples,
                                   std::uint64_t seed);

struct BoundRow {
  std::size_t j = 0;
  std::optional<int> degree;  // nullopt for a zero coefficient
  int bound = 0;
  bool ok = false;
};

std::vector<BoundRow> check_bounds(const CharPoly& p);

nlohmann::json charpoly_to_json(const CharPoly& p, const std::vector<std::string>& y_vars);

}  // namespace cnull
