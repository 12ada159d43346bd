#include "cnull/numeric.hpp"

#include <cmath>

#include "cnull/error.hpp"

namespace cnull {

void check_precision(unsigned bits) {
  for (unsigned p : kPrecisionLadder) {
    if (p == bits) return;
  }
  throw Error(ErrorKind::InvalidArgument,
              "precision must be one of 128, 256, 512, 1024 bits (got " + std::to_string(bits) + ")");
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits10_(Real::default_precision()) {
  // mpfr_float counts decimal digits.
  Real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

Real to_real(const Rat& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

CFloat to_cfloat(const Rat& q) { return {to_real(q), Real(0)}; }

Real abs(const CFloat& z) { return boost::multiprecision::hypot(z.re, z.im); }

Real distance(std::span<const CFloat> a, std::span<const CFloat> b) {
  Real sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const CFloat d = a[i] - b[i];
    sum += d.re * d.re + d.im * d.im;
  }
  return sqrt(sum);
}

Real max_abs(std::span<const CFloat> a) {
  Real m = 0;
  for (const auto& z : a) m = boost::multiprecision::max(m, abs(z));
  return m;
}

Real pow2(long e) {
  Real r = 1;
  mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
  return r;
}

CFloat evaluate(const MPoly& p, std::span<const CFloat> point) {
  if (point.size() != p.var_count()) {
    throw Error(ErrorKind::LengthMismatch, "evaluation point has wrong length");
  }
  return p.evaluate_with<CFloat>(point, [](const Rat& q) { return to_cfloat(q); });
}

Real evaluate_abs(const MPoly& p, std::span<const CFloat> point) {
  std::vector<Real> moduli;
  moduli.reserve(point.size());
  for (const auto& z : point) moduli.push_back(abs(z));
  return p.evaluate_with<Real>(std::span<const Real>(moduli),
                               [](const Rat& q) { return Real(to_real(abs(q))); });
}

}  // namespace cnull
