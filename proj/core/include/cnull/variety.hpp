#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cnull/linear_algebra.hpp"
#include "cnull/numeric.hpp"
#include "cnull/polynomial.hpp"

namespace cnull {

/// Polynomial parametrization s ↦ (φ_1(s), …, φ_m(s)) of a variety by k
/// parameters.
struct Parametrization {
  std::vector<std::string> vars;
  std::vector<MPoly> components;

  std::size_t param_count() const { return vars.size(); }
};

/// Pure k-dimensional algebraic set A ⊂ C^m, given by generators and,
/// optionally, a polynomial parametrization. Fibre computations need the
/// parametrization; an implicit-only variety supports membership tests.
class Variety {
 public:
  /// Validates the data; throws Error{SchemaError} on shape problems and
  /// Error{GeneratorNotAnnihilated} if some generator does not vanish
  /// identically along the parametrization.
  Variety(std::vector<std::string> ambient_vars, std::size_t dim, std::vector<MPoly> generators,
          std::optional<Parametrization> param);

  std::size_t ambient_dim() const { return ambient_vars_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& ambient_vars() const { return ambient_vars_; }
  const std::vector<MPoly>& generators() const { return generators_; }
  bool has_param() const { return param_.has_value(); }
  /// Throws Error{MissingParametrization}.
  const Parametrization& param() const;

  bool contains(std::span<const Rat> point) const;
  std::vector<Rat> point_at(std::span<const Rat> params) const;
  CPoint point_at(std::span<const CFloat> params) const;

 private:
  std::vector<std::string> ambient_vars_;
  std::size_t dim_;
  std::vector<MPoly> generators_;
  std::optional<Parametrization> param_;
};

/// Affine space C^k with the identity parametrization.
Variety affine_space(std::vector<std::string> vars);

/// Rational function num/den in the ambient variables.
struct RationalComponent {
  MPoly num;
  MPoly den;
};

/// c-algebraic map A → C^n given by rational components that extend
/// continuously along the parametrization. The continuity contract is
/// checked on construction by exact division of the pulled-back numerator by
/// the pulled-back denominator; the quotients are cached as pullbacks().
class CAMap {
 public:
  /// Throws Error{NotCAlgebraic} if some component does not extend
  /// polynomially along the parametrization.
  CAMap(std::shared_ptr<const Variety> domain, std::vector<RationalComponent> components);

  static CAMap polynomial(std::shared_ptr<const Variety> domain, std::vector<MPoly> components);

  const Variety& domain() const { return *domain_; }
  const std::shared_ptr<const Variety>& domain_ptr() const { return domain_; }
  std::size_t size() const { return components_.size(); }
  const std::vector<RationalComponent>& components() const { return components_; }

  /// f∘φ, one polynomial in the parameters per component.
  /// Throws Error{MissingParametrization}.
  const std::vector<MPoly>& pullbacks() const;

  /// π∘f for a rational matrix π with size() columns.
  CAMap linear_image(const RatMatrix& pi) const;
  /// (f, h): components of this map followed by those of `other`.
  CAMap concat(const CAMap& other) const;
  /// Single component i as a map.
  CAMap component(std::size_t i) const;

 private:
  std::shared_ptr<const Variety> domain_;
  std::vector<RationalComponent> components_;
  std::optional<std::vector<MPoly>> pullbacks_;
};

/// Returns the cached pullbacks; see CAMap::pullbacks.
const std::vector<MPoly>& pullback(const CAMap& map);

// --- JSON -------------------------------------------------------------------

/// {"ambient_vars": [...], "dim": k, "generators": [poly...],
///  "param": {"vars": [...], "components": [poly...]}}
Variety load_variety(const nlohmann::json& spec);
nlohmann::json variety_to_json(const Variety& v);

/// {"components": [{"num": poly, "den": poly}, ...]}; "den" defaults to 1.
CAMap load_map(const nlohmann::json& spec, std::shared_ptr<const Variety> domain);

// --- degree and sampling ----------------------------------------------------

/// Number of distinct points in which a random affine slice of complementary
/// dimension meets the image of s ↦ components(s), with k = param_count ∈
/// {1, 2}. Counts are maximised over three seeds; each seed retries up to five
/// slices when the slice is degenerate (constant, tangent or not
/// zero-dimensional). Throws Error{DegenerateSlice} when no slice succeeds.
std::size_t parametrized_degree(std::span<const MPoly> components, std::size_t param_count,
                                std::uint64_t seed, unsigned prec = kDefaultPrecision);

/// deg V by generic slicing of the parametrization.
std::size_t degree_by_slicing(const Variety& v, std::uint64_t seed, unsigned prec = kDefaultPrecision);

/// φ(s0) for pseudo-random rational parameters of height <= 100.
std::vector<Rat> sample_point(const Variety& v, std::uint64_t seed);

}  // namespace cnull
