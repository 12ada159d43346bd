#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <span>
#include <vector>

#include "cnull/polynomial.hpp"
#include "cnull/rational.hpp"

namespace cnull {

using Real = boost::multiprecision::mpfr_float;

/// Working precisions accepted by the numeric routines, in bits.
inline constexpr unsigned kPrecisionLadder[] = {128, 256, 512, 1024};
inline constexpr unsigned kDefaultPrecision = 256;
inline constexpr unsigned kMaxPrecision = 1024;

/// Throws Error{InvalidArgument} unless bits is one of kPrecisionLadder.
void check_precision(unsigned bits);

/// Sets the MPFR default precision for the lifetime of the object; every Real
/// created inside the scope carries that precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits10_;
};

/// Complex number at MPFR precision.
struct CFloat {
  Real re{0};
  Real im{0};

  friend CFloat operator+(const CFloat& a, const CFloat& b) { return {a.re + b.re, a.im + b.im}; }
  friend CFloat operator-(const CFloat& a, const CFloat& b) { return {a.re - b.re, a.im - b.im}; }
  friend CFloat operator*(const CFloat& a, const CFloat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CFloat operator/(const CFloat& a, const CFloat& b) {
    const Real den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  CFloat operator-() const { return {-re, -im}; }
};

using CPoint = std::vector<CFloat>;

Real to_real(const Rat& q);
CFloat to_cfloat(const Rat& q);
Real abs(const CFloat& z);
/// Euclidean distance in C^n.
Real distance(std::span<const CFloat> a, std::span<const CFloat> b);
/// Largest coordinate modulus.
Real max_abs(std::span<const CFloat> a);
/// 2^e at the current precision.
Real pow2(long e);

CFloat evaluate(const MPoly& p, std::span<const CFloat> point);
/// Sum of |c|·|x^e| over the terms; the natural scale for residual tests.
Real evaluate_abs(const MPoly& p, std::span<const CFloat> point);

}  // namespace cnull
