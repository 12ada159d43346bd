#pragma once

#include <span>
#include <vector>

#include "cnull/numeric.hpp"
#include "cnull/polynomial.hpp"

namespace cnull {

struct Root {
  CFloat value;
  int multiplicity = 1;
};

struct RootSet {
  std::vector<Root> roots;
  /// max |p(root)| divided by the largest coefficient modulus.
  double residual_bound = 0.0;
  /// Precision the roots were finally computed at.
  unsigned prec = kDefaultPrecision;

  int total_multiplicity() const;
};

/// All complex roots of a non-constant univariate polynomial.
///
/// Multiplicities come from an exact square-free decomposition over Q; each
/// square-free factor is solved by Aberth iteration. If the iteration stalls,
/// or roots of different factors are closer than the clustering tolerance,
/// the precision is doubled up to 1024 bits before giving up with
/// Error{PrecisionExhausted}. The returned values carry `result.prec` bits.
RootSet roots_univariate(const MPoly& p, unsigned prec = kDefaultPrecision);

/// Isolated common zeros of two bivariate polynomials.
///
/// Eliminates each variable with a Sylvester resultant, solves both
/// univariate resultants, and keeps the coordinate pairs on which p and q
/// vanish to working precision. Throws Error{NonZeroDimensional} when a
/// resultant vanishes identically (common factor) or the system does not
/// constrain one of the variables. An inconsistent system yields an empty list.
std::vector<CPoint> solve_system_2(const MPoly& p, const MPoly& q, unsigned prec = kDefaultPrecision);

/// Continued-fraction reconstruction of the rational with numerator and
/// denominator bounded by height_bound that lies within 2^(-prec/2) of v.re.
/// Throws Error{NonReal} if |v.im| exceeds that tolerance and
/// Error{NoReconstruction} if no convergent qualifies.
Rat rational_reconstruct(const CFloat& v, const BigInt& height_bound, unsigned prec);

struct Cluster {
  CPoint center;  // mean of the members
  int count = 0;
  std::vector<std::size_t> members;
};

/// Single-linkage clustering at distance tol. Clusters are ordered by their
/// first member.
std::vector<Cluster> cluster(std::span<const CPoint> points, const Real& tol);
std::vector<Cluster> cluster(std::span<const CFloat> points, const Real& tol);

/// 2^(-prec/4) * max(1, scale): separates reconstruction noise from genuine
/// coincidences.
Real default_cluster_tolerance(unsigned prec, const Real& scale);

}  // namespace cnull
