#include "cnull/roots.hpp"

#include <algorithm>
#include <numeric>

#include "cnull/error.hpp"

namespace cnull {

namespace {

using boost::multiprecision::cos;
using boost::multiprecision::sin;

struct Attempt {
  bool ok = false;
  std::vector<CFloat> roots;
};

CFloat horner(std::span<const CFloat> coeffs, const CFloat& z) {
  CFloat acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

// Aberth–Ehrlich iteration for a square-free polynomial of degree >= 2.
// Must run inside a PrecisionScope of `prec` bits.
Attempt aberth(std::span<const Rat> dense, unsigned prec) {
  const std::size_t n = dense.size() - 1;
  std::vector<CFloat> c;
  for (const auto& q : dense) c.push_back(to_cfloat(q / dense.back()));
  std::vector<CFloat> dc;
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * to_cfloat(Rat(static_cast<long>(i))));

  // Start on a circle around the centroid whose radius bounds all roots.
  Real radius = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Real a = abs(c[i]);
    if (a == 0) continue;
    radius = boost::multiprecision::max(radius, Real(pow(a, Real(1) / Real(n - i))));
  }
  radius = 2 * radius + 1;
  const CFloat centre = c[n - 1] / to_cfloat(Rat(-static_cast<long>(n)));
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::vector<CFloat> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real angle = two_pi * k / n + Real(0.4);
    z[k] = centre + CFloat{radius * cos(angle), radius * sin(angle)};
  }

  const Real target = pow2(-static_cast<long>(prec) * 7 / 8);
  const int max_iter = 200 + 20 * static_cast<int>(n);
  for (int iter = 0; iter < max_iter; ++iter) {
    Real worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const CFloat pv = horner(c, z[i]);
      if (pv.re == 0 && pv.im == 0) continue;
      const CFloat dv = horner(dc, z[i]);
      CFloat sum{Real(0), Real(0)};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) sum = sum + CFloat{Real(1), Real(0)} / (z[i] - z[j]);
      }
      const CFloat ratio = pv / dv;
      const CFloat w = ratio / (CFloat{Real(1), Real(0)} - ratio * sum);
      z[i] = z[i] - w;
      const Real scale = boost::multiprecision::max(Real(1), abs(z[i]));
      worst = boost::multiprecision::max(worst, Real(abs(w) / scale));
    }
    if (worst <= target) return {true, std::move(z)};
  }
  return {false, {}};
}

struct Factor {
  std::vector<Rat> dense;
  int multiplicity;
};

std::vector<Factor> factorize(const MPoly& p, int& zero_multiplicity) {
  auto dense = dense_coefficients(p);
  zero_multiplicity = 0;
  while (dense.size() > 1 && dense.front() == 0) {
    dense.erase(dense.begin());
    ++zero_multiplicity;
  }
  std::vector<Factor> out;
  const MPoly rest = from_dense(dense);
  if (rest.is_constant()) return out;
  const auto parts = squarefree_decomposition(rest);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].is_constant()) continue;
    out.push_back({dense_coefficients(parts[i]), static_cast<int>(i + 1)});
  }
  return out;
}

std::optional<RootSet> solve_at(const MPoly& p, const std::vector<Factor>& factors, int zero_multiplicity,
                                 unsigned prec) {
  PrecisionScope scope(prec);
  RootSet out;
  out.prec = prec;
  if (zero_multiplicity > 0) {
    out.roots.push_back({to_cfloat(Rat(0)), zero_multiplicity});
  }
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& dense = factors[f].dense;
    if (dense.size() == 2) {
      out.roots.push_back({to_cfloat(-dense[0] / dense[1]), factors[f].multiplicity});
      continue;
    }
    auto attempt = aberth(dense, prec);
    if (!attempt.ok) return std::nullopt;
    for (auto& z : attempt.roots) {
      out.roots.push_back({std::move(z), factors[f].multiplicity});
    }
  }

  // Distinct factors are coprime, so their roots must be numerically apart.
  Real scale = 1;
  for (const auto& r : out.roots) scale = boost::multiprecision::max(scale, abs(r.value));
  const Real tol = default_cluster_tolerance(prec, scale);
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < out.roots.size(); ++j) {
      if (abs(out.roots[i].value - out.roots[j].value) <= tol) return std::nullopt;
    }
  }

  const auto dense = dense_coefficients(p);
  Real coeff_scale = 0;
  for (const auto& q : dense) coeff_scale = boost::multiprecision::max(coeff_scale, to_real(abs(q)));
  Real residual = 0;
  for (const auto& r : out.roots) {
    const CFloat v = evaluate(p, std::span<const CFloat>(&r.value, 1));
    residual = boost::multiprecision::max(residual, abs(v));
  }
  out.residual_bound = static_cast<double>(residual / coeff_scale);
  return out;
}

}  // namespace

int RootSet::total_multiplicity() const {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

Real default_cluster_tolerance(unsigned prec, const Real& scale) {
  return pow2(-static_cast<long>(prec) / 4) * boost::multiprecision::max(Real(1), scale);
}

RootSet roots_univariate(const MPoly& p, unsigned prec) {
  check_precision(prec);
  if (p.var_count() != 1) throw Error(ErrorKind::VariableCountMismatch, "roots_univariate needs one variable");
  if (p.is_constant()) throw Error(ErrorKind::InvalidArgument, "roots_univariate needs a non-constant polynomial");
  int zero_multiplicity = 0;
  const auto factors = factorize(p, zero_multiplicity);
  for (unsigned bits = prec; bits <= kMaxPrecision; bits *= 2) {
    if (auto result = solve_at(p, factors, zero_multiplicity, bits)) return std::move(*result);
  }
  throw Error(ErrorKind::PrecisionExhausted, "roots remain ambiguous at 1024 bits");
}

namespace {

// View of a polynomial in one variable of a two-variable ring as univariate,
// assuming the other variable does not occur.
MPoly to_univariate(const MPoly& p, std::size_t var) {
  MPoly out(1);
  for (const auto& [e, c] : p.terms()) out.add_term(Exponent{e[var]}, c);
  return out;
}

std::vector<CFloat> coordinate_candidates(const MPoly& res, std::size_t var, unsigned prec) {
  const MPoly u = to_univariate(res, var);
  if (u.is_constant()) return {};
  std::vector<CFloat> out;
  for (auto& r : roots_univariate(u, prec).roots) out.push_back(std::move(r.value));
  return out;
}

}  // namespace

std::vector<CPoint> solve_system_2(const MPoly& p, const MPoly& q, unsigned prec) {
  check_precision(prec);
  if (p.var_count() != 2 || q.var_count() != 2) {
    throw Error(ErrorKind::VariableCountMismatch, "solve_system_2 needs two bivariate polynomials");
  }
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::NonZeroDimensional, "an equation vanishes identically");

  for (std::size_t var : {std::size_t{0}, std::size_t{1}}) {
    if (p.degree_in(var) == 0 && q.degree_in(var) == 0) {
      // Both equations ignore `var`: either no solution or a whole line.
      const std::size_t other = 1 - var;
      const MPoly g = gcd_univariate(to_univariate(p, other), to_univariate(q, other));
      if (!g.is_constant()) throw Error(ErrorKind::NonZeroDimensional, "system leaves a variable free");
      return {};
    }
  }

  const MPoly res_y = resultant(p, q, 1);  // in x
  const MPoly res_x = resultant(p, q, 0);  // in y
  if (res_y.is_zero() || res_x.is_zero()) {
    throw Error(ErrorKind::NonZeroDimensional, "resultant vanishes identically (common factor)");
  }

  PrecisionScope scope(prec);
  const auto xs = coordinate_candidates(res_y, 0, prec);
  const auto ys = coordinate_candidates(res_x, 1, prec);
  const Real tol = pow2(-static_cast<long>(prec) / 4);
  std::vector<CPoint> candidates;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      CPoint pt{x, y};
      const Real rp = abs(evaluate(p, pt));
      const Real rq = abs(evaluate(q, pt));
      if (rp <= tol * (evaluate_abs(p, pt) + 1) && rq <= tol * (evaluate_abs(q, pt) + 1)) {
        candidates.push_back(std::move(pt));
      }
    }
  }
  Real scale = 1;
  for (const auto& c : candidates) scale = boost::multiprecision::max(scale, max_abs(c));
  std::vector<CPoint> solutions;
  for (const auto& c : cluster(std::span<const CPoint>(candidates), default_cluster_tolerance(prec, scale))) {
    solutions.push_back(candidates[c.members.front()]);
  }
  return solutions;
}

Rat rational_reconstruct(const CFloat& v, const BigInt& height_bound, unsigned prec) {
  check_precision(prec);
  PrecisionScope scope(prec);
  const Real tol = pow2(-static_cast<long>(prec) / 2);
  if (abs(v.im) > tol * boost::multiprecision::max(Real(1), abs(v.re))) {
    throw Error(ErrorKind::NonReal, "imaginary part exceeds tolerance");
  }
  const Real x = v.re;

  // Convergents h/k of the continued fraction of x.
  BigInt h_prev2 = 0, h_prev = 1;
  BigInt k_prev2 = 1, k_prev = 0;
  Real rest = x;
  for (int step = 0; step < 4 * static_cast<int>(prec); ++step) {
    const Real fl = floor(rest);
    BigInt a;
    mpfr_get_z(a.get_mpz_t(), fl.backend().data(), MPFR_RNDD);
    const BigInt h = a * h_prev + h_prev2;
    const BigInt k = a * k_prev + k_prev2;
    if (abs(h) > height_bound || k > height_bound) break;
    const Rat candidate(h, k);
    if (abs(x - to_real(candidate)) <= tol) return candidate;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const Real frac = rest - fl;
    if (frac == 0) break;
    rest = 1 / frac;
  }
  throw Error(ErrorKind::NoReconstruction,
              "no rational of height <= " + height_bound.get_str() + " within 2^(-" +
                  std::to_string(prec / 2) + ")");
}

std::vector<Cluster> cluster(std::span<const CPoint> points, const Real& tol) {
  const std::size_t n = points.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(points[i], points[j]) <= tol) {
        const std::size_t a = find(i);
        const std::size_t b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<Cluster> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.push_back({});
    }
    out[slot[r]].members.push_back(i);
  }
  for (auto& c : out) {
    const std::size_t dim = points[c.members.front()].size();
    c.center.assign(dim, CFloat{});
    for (std::size_t m : c.members) {
      for (std::size_t d = 0; d < dim; ++d) c.center[d] = c.center[d] + points[m][d];
    }
    const CFloat count = to_cfloat(Rat(static_cast<long>(c.members.size())));
    for (auto& z : c.center) z = z / count;
    c.count = static_cast<int>(c.members.size());
  }
  return out;
}

std::vector<Cluster> cluster(std::span<const CFloat> points, const Real& tol) {
  std::vector<CPoint> lifted;
  lifted.reserve(points.size());
  for (const auto& z : points) lifted.push_back(CPoint{z});
  return cluster(std::span<const CPoint>(lifted), tol);
}

}  // namespace cnull
