#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cnull/rational.hpp"

namespace cnull {

using Exponent = std::vector<std::uint32_t>;

/// Graded-lex comparison with variable 0 most significant, arranged so that a
/// std::map iterates from the leading term downwards.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Exact sparse multivariate polynomial over Q.
///
/// Terms are stored in graded-lex order (leading term first) and never carry a
/// zero coefficient. Every binary operation requires both operands to live in
/// the same ring, i.e. to have equal var_count().
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rat, GrlexGreater>;

  explicit MPoly(std::size_t var_count = 1);

  static MPoly constant(std::size_t var_count, const Rat& c);
  static MPoly variable(std::size_t var_count, std::size_t index);
  static MPoly monomial(Exponent exponent, const Rat& c);

  std::size_t var_count() const { return var_count_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Coefficient of the given monomial (zero when absent).
  Rat coefficient(const Exponent& exponent) const;
  /// Value at the origin.
  Rat constant_term() const;

  /// Adds c·x^exponent in place, dropping the term if it cancels.
  void add_term(const Exponent& exponent, const Rat& c);

  /// Total degree; std::nullopt stands for -infinity (zero polynomial).
  std::optional<int> total_degree() const;
  /// Degree in one variable; -1 for the zero polynomial.
  int degree_in(std::size_t var) const;

  /// Leading term in graded-lex order. Precondition: !is_zero().
  const std::pair<const Exponent, Rat>& leading_term() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rat& scalar);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
  friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned exponent) const;

  /// Exact evaluation at a rational point.
  Rat evaluate(std::span<const Rat> point) const;
  /// Double-precision complex evaluation.
  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

  /// Generic evaluation over any commutative ring T that can absorb Rat via
  /// `from_rat`.
  template <class T, class FromRat>
  T evaluate_with(std::span<const T> point, FromRat from_rat) const;

  /// Formal partial derivative.
  MPoly derivative(std::size_t var) const;

  /// Part of total degree exactly `degree`.
  MPoly homogeneous_part(int degree) const;

  /// Human-readable rendering, e.g. "-3/2*x^2*y + 1".
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void check_same_ring(const MPoly& other, const char* op) const;

  std::size_t var_count_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& out, const MPoly& p);

/// Ring operation dispatcher; kept for callers that select the operation at
/// run time.
enum class ArithKind { Add, Sub, Mul };
MPoly arith(const MPoly& p, const MPoly& q, ArithKind kind);

/// Substitutes subs[i] for variable i. All substitutes must share one ring;
/// the result lives in that ring.
MPoly compose(const MPoly& p, std::span<const MPoly> subs);

/// Returns r with r*q == p, or std::nullopt when q does not divide p.
std::optional<MPoly> try_divide(const MPoly& p, const MPoly& q);
/// As try_divide but throws Error{NotDivisible}.
MPoly exact_divide(const MPoly& p, const MPoly& q);

/// Coefficients of p viewed as a polynomial in `var`:
/// result[i] is the coefficient of var^i (itself free of `var`).
std::vector<MPoly> coefficients_in(const MPoly& p, std::size_t var);

/// Sylvester resultant of p and q with respect to `var`, computed as a
/// fraction-free (Bareiss) determinant. The result stays in the same ring and
/// is free of `var`. When both degrees in `var` are zero the resultant is 1
/// by convention.
MPoly resultant(const MPoly& p, const MPoly& q, std::size_t var);

// --- univariate helpers (var_count() == 1) ---------------------------------

/// Dense coefficients, lowest degree first. Empty for zero.
std::vector<Rat> dense_coefficients(const MPoly& p);
MPoly from_dense(std::span<const Rat> coeffs);

/// Remainder of univariate division p mod q (q nonzero).
MPoly remainder_univariate(const MPoly& p, const MPoly& q);

/// Monic gcd of two univariate polynomials; zero only if both are zero.
MPoly gcd_univariate(const MPoly& p, const MPoly& q);

/// Yun's square-free decomposition: p = lc * prod factors[i]^(i+1) with
/// pairwise coprime monic square-free factors (entries may be 1).
/// Precondition: p non-constant.
std::vector<MPoly> squarefree_decomposition(const MPoly& p);

// --- interpolation ----------------------------------------------------------

struct Sample {
  std::vector<Rat> point;
  Rat value;
};

/// Recovers the polynomial with per-variable degree <= degree_bounds[i] that
/// matches all samples. Samples must cover a tensor grid with at least
/// bound+1 distinct coordinates per variable; the first bound+1 coordinates
/// (in sample order) determine the interpolant and the remaining samples are
/// checked against it.
///
/// Throws Error{GridMalformed} or Error{InconsistentSamples}.
MPoly interpolate(std::span<const Sample> samples, std::span<const int> degree_bounds);

// --- implementation ---------------------------------------------------------

template <class T, class FromRat>
T MPoly::evaluate_with(std::span<const T> point, FromRat from_rat) const {
  // Cache of successive powers per variable.
  std::vector<std::vector<T>> powers(var_count_);
  for (std::size_t i = 0; i < var_count_; ++i) powers[i].push_back(from_rat(Rat(1)));
  auto power = [&](std::size_t i, std::uint32_t e) -> const T& {
    auto& cache = powers[i];
    while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
    return cache[e];
  };
  T acc = from_rat(Rat(0));
  for (const auto& [exp, c] : terms_) {
    T term = from_rat(c);
    for (std::size_t i = 0; i < var_count_; ++i) {
      if (exp[i] != 0) term = term * power(i, exp[i]);
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace cnull
