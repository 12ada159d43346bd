#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cnull/numeric.hpp"
#include "cnull/variety.hpp"

namespace cnull {

enum class Theorem { Proper, Partial, General, StrictlyRegular, Fallback };

std::string to_string(Theorem t);
Theorem theorem_from_string(const std::string& name);

/// Identity g^N = Σ_j f_j · h_j(f, aux, g) on A.
///
/// Each h_j is a polynomial in (y_1..y_n, z_1..z_r, t): y_i stands for f_i,
/// z_i for the ambient polynomial aux[i], and t for g. aux is empty except for
/// strictly regular certificates, where it holds the appended affine forms.
struct Certificate {
  unsigned exponent = 0;
  std::vector<MPoly> h;
  std::vector<MPoly> aux;
  Theorem theorem = Theorem::Proper;
  bool verified = false;
  std::string diagnostics;
};

/// Writes a (in y_1..y_k) as Σ_{i<ell} y_i · parts[i], assigning every
/// monomial to the lowest-index y_i dividing it. Throws Error{NotInIdeal}
/// when a monomial avoids y_1..y_ell.
std::vector<MPoly> split_coeff(const MPoly& a, std::size_t ell);

/// Proper case k = n: N = d(f), h_i = −Σ_j a_{j,i}(y) t^(d−j). Throws
/// Error{VanishingHypothesisFailed} if g does not vanish on f⁻¹(0).
Certificate certify_proper(const CAMap& f, const CAMap& g, std::uint64_t seed, unsigned prec = kDefaultPrecision);

/// Only f_1..f_ell appear: N = d(f), h_i = 0 for i > ell. Throws
/// Error{NotInIdeal} if some a_j does not vanish on {y_1 = ... = y_ell = 0}.
Certificate certify_partial(const CAMap& f, std::size_t ell, const CAMap& g, std::uint64_t seed,
                            unsigned prec = kDefaultPrecision);

/// n > k: reduces to the proper case through a random epimorphism π and
/// expands the result back, with N = d(f)·deg f(A). Up to five projections
/// are tried; afterwards the linear search runs with exponent bound N and
/// degree cap N. Failures are recorded in diagnostics. Throws
/// Error{VanishingHypothesisFailed} if the fallback fails too.
Certificate certify_general(const CAMap& f, const CAMap& g, std::uint64_t seed, unsigned prec = kDefaultPrecision);

/// Searches h_j of total degree <= degree_cap in (y, t) with
/// g^N' = Σ f_j h_j(f, g) along φ, for N' = 1..max_exponent, returning the
/// first success. Throws Error{NoSolutionWithinCap}.
Certificate certify_fallback(const CAMap& f, const CAMap& g, unsigned max_exponent, unsigned degree_cap);

/// One step of the search: a certificate with exactly this exponent, if any.
std::optional<Certificate> fallback_at_exponent(const CAMap& f, const CAMap& g, unsigned exponent,
                                                unsigned degree_cap);

/// Component of the cycle of zeroes: a parametrized variety (or, for k = n,
/// an isolated point of f⁻¹(0)) with its multiplicity and degree.
struct CycleComponent {
  std::shared_ptr<const Variety> variety;  // null for an isolated point
  CPoint point;                            // set for an isolated point
  int multiplicity = 0;
  std::size_t degree = 0;
};

struct CycleData {
  std::vector<CycleComponent> components;
  std::size_t total_degree = 0;
};

/// deg Z_f = Σ i_j · deg V_j for n < k. deg V_j comes from slicing and i_j
/// from the local multiplicity of (f, L) at a generic point of V_j unless
/// given in `multiplicities`. Throws Error{ComponentNotInFiber} and
/// Error{NotStrictlyRegular}.
CycleData cycle_degree(const CAMap& f, const std::vector<std::shared_ptr<const Variety>>& components,
                       const std::vector<MPoly>& affine_forms, std::uint64_t seed,
                       unsigned prec = kDefaultPrecision,
                       const std::optional<std::vector<int>>& multiplicities = std::nullopt);

/// k = n: the zero cycle of f is the fibre over 0 weighted by local
/// multiplicities.
CycleData point_cycle_degree(const CAMap& f, std::uint64_t seed, unsigned prec = kDefaultPrecision);

/// Random affine forms L with (f, L) proper along φ; five draws before
/// Error{NotStrictlyRegular}.
std::vector<MPoly> choose_affine_forms(const CAMap& f, std::uint64_t seed);

/// Strictly regular case n < k: certify_partial on (f, L) with ell = n,
/// padded by g^(deg Z_f − d(f, L)). With k = n delegates to certify_proper.
/// Throws Error{CycleDataUnavailable} if no cycle is given and
/// Error{NotStrictlyRegular} if (f, L) is not proper.
Certificate certify_strictly_regular(const CAMap& f, const CAMap& g, std::optional<std::vector<MPoly>> affine_forms,
                                     const std::optional<CycleData>& cycle, std::uint64_t seed,
                                     unsigned prec = kDefaultPrecision);

/// Exact recomputation of g^N − Σ f_j·h_j(f, aux, g) along φ. Malformed
/// certificates verify as false.
bool verify_certificate(const CAMap& f, const CAMap& g, const Certificate& cert);

/// Symbol names of the h polynomials: y1.., z1.., t.
std::vector<std::string> certificate_symbols(std::size_t n, std::size_t aux);

nlohmann::json certificate_to_json(const Certificate& cert, std::size_t n, const std::vector<std::string>& ambient_vars);
/// Reads a certificate for a map with n components on a domain with the
/// given ambient variables. Throws Error{SchemaError}.
Certificate certificate_from_json(const nlohmann::json& j, std::size_t n, const std::vector<std::string>& ambient_vars);

}  // namespace cnull
