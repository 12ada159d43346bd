#include "cnull/proper_map.hpp"

#include <algorithm>

#include "cnull/error.hpp"
#include "cnull/random.hpp"
#include "cnull/roots.hpp"

namespace cnull {

namespace {

constexpr int kFiberDraws = 5;
constexpr int kRedrawBudget = 5;
constexpr int kPerturbDraws = 3;
constexpr long kGenericHeight = 100;

std::size_t param_dim(const CAMap& f) { return f.domain().param().param_count(); }

void check_supported(const CAMap& f) {
  const std::size_t k = param_dim(f);
  if (k == 1) return;
  if (k == 2 && f.size() == 2) return;
  throw Error(ErrorKind::Unsupported, "fibre computations need k = 1, or k = n = 2 (got k = " +
                                          std::to_string(k) + ", n = " + std::to_string(f.size()) + ")");
}

// Parameter solutions of f∘φ = y, each with its root multiplicity (k = 1) or 1.
std::vector<std::pair<CPoint, int>> solve_params(const CAMap& f, std::span<const Rat> y, unsigned prec) {
  const auto& pulls = f.pullbacks();
  if (y.size() != pulls.size()) throw Error(ErrorKind::LengthMismatch, "target point has wrong length");
  const std::size_t k = param_dim(f);
  std::vector<std::pair<CPoint, int>> out;
  if (k == 1) {
    MPoly g(1);
    for (std::size_t i = 0; i < pulls.size(); ++i) {
      const MPoly eq = pulls[i] - MPoly::constant(1, y[i]);
      g = g.is_zero() ? eq : gcd_univariate(g, eq);
      if (!g.is_zero() && g.is_constant()) return out;
    }
    if (g.is_zero()) throw Error(ErrorKind::NotProper, "fibre is not finite");
    if (g.is_constant()) return out;
    for (auto& r : roots_univariate(g, prec).roots) out.emplace_back(CPoint{std::move(r.value)}, r.multiplicity);
    return out;
  }
  try {
    for (auto& s : solve_system_2(pulls[0] - MPoly::constant(2, y[0]), pulls[1] - MPoly::constant(2, y[1]), prec)) {
      out.emplace_back(std::move(s), 1);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonZeroDimensional) throw Error(ErrorKind::NotProper, "fibre is not finite");
    throw;
  }
  return out;
}

Real point_tolerance(unsigned prec, const std::vector<CPoint>& pts) {
  Real scale = 1;
  for (const auto& p : pts) scale = boost::multiprecision::max(scale, max_abs(p));
  return default_cluster_tolerance(prec, scale);
}

std::vector<Rat> random_target(const CAMap& f, Rng& rng) {
  std::vector<Rat> y;
  if (f.size() == param_dim(f)) {
    for (std::size_t i = 0; i < f.size(); ++i) y.push_back(rng.rational(kGenericHeight));
    return y;
  }
  // n > k: a generic point of the image f(A).
  std::vector<Rat> s;
  for (std::size_t i = 0; i < param_dim(f); ++i) s.push_back(rng.rational(kGenericHeight));
  for (const auto& p : f.pullbacks()) y.push_back(p.evaluate(s));
  return y;
}

void require_proper(const CAMap& f) {
  const auto w = properness_witness(f);
  if (!w.proper) throw Error(ErrorKind::NotProper, w.evidence);
}

}  // namespace

Fiber compute_fiber(const CAMap& f, std::span<const Rat> y, unsigned prec) {
  check_precision(prec);
  check_supported(f);
  PrecisionScope scope(prec);
  const auto sols = solve_params(f, y, prec);
  std::vector<CPoint> pts;
  for (const auto& [s, mult] : sols) pts.push_back(f.domain().point_at(s));
  Fiber fiber;
  fiber.prec = prec;
  for (const auto& c : cluster(std::span<const CPoint>(pts), point_tolerance(prec, pts))) {
    FiberPoint fp;
    fp.point = pts[c.members.front()];
    for (std::size_t m : c.members) fp.params.push_back(sols[m].first);
    fiber.points.push_back(std::move(fp));
  }
  return fiber;
}

ProperWitness properness_witness(const CAMap& f) {
  const std::size_t k = param_dim(f);
  const auto& pulls = f.pullbacks();
  if (k == 1) {
    int best = 0;
    for (const auto& p : pulls) best = std::max(best, p.degree_in(0));
    if (best >= 1) return {true, "max deg_t(f∘φ) = " + std::to_string(best) + " >= 1"};
    return {false, "f∘φ is constant"};
  }
  if (k == 2 && pulls.size() == 2) {
    std::vector<MPoly> tops;
    for (const auto& p : pulls) {
      const auto d = p.total_degree();
      if (!d || *d < 1) return {false, "a component of f∘φ is constant"};
      tops.push_back(p.homogeneous_part(*d));
    }
    // Common zero at the direction (1, 0)?
    const Rat at_inf[] = {Rat(1), Rat(0)};
    if (tops[0].evaluate(at_inf) == 0 && tops[1].evaluate(at_inf) == 0) {
      return {false, "top-degree forms share the direction (1, 0)"};
    }
    // Common zero at directions (s, 1)?
    std::vector<MPoly> dehom;
    for (const auto& h : tops) {
      MPoly u(1);
      for (const auto& [e, c] : h.terms()) u.add_term(Exponent{e[0]}, c);
      dehom.push_back(std::move(u));
    }
    if (!gcd_univariate(dehom[0], dehom[1]).is_constant()) {
      return {false, "top-degree forms share a direction at infinity"};
    }
    return {true, "top-degree forms of f∘φ have no common zero at infinity"};
  }
  return {false, "properness test supports k = 1, or k = n = 2"};
}

std::size_t fiber_count_at(const CAMap& f, std::span<const Rat> y, unsigned prec) {
  return compute_fiber(f, y, prec).points.size();
}

std::size_t geometric_degree(const CAMap& f, std::uint64_t seed, unsigned prec) {
  check_supported(f);
  require_proper(f);
  if (f.size() < param_dim(f)) throw Error(ErrorKind::InvalidArgument, "geometric degree needs n >= k");
  for (int attempt = 0; attempt < kRedrawBudget; ++attempt) {
    Rng rng(seed, {stream::kFiberSample, static_cast<std::uint64_t>(attempt)});
    std::optional<std::size_t> common;
    bool agree = true;
    for (int draw = 0; draw < kFiberDraws && agree; ++draw) {
      const auto y = random_target(f, rng);
      const std::size_t count = fiber_count_at(f, y, prec);
      if (common && *common != count) agree = false;
      common = count;
    }
    if (agree && common && *common > 0) return *common;
  }
  throw Error(ErrorKind::InconsistentFiberCounts, "generic fibre counts disagree after redraws");
}

Rat growth_exponent(const CAMap& g) {
  if (g.size() != 1) throw Error(ErrorKind::InvalidArgument, "growth exponent needs a single function");
  const auto deg_g = g.pullbacks().front().total_degree();
  if (!deg_g || *deg_g == 0) return Rat(0);
  int deg_phi = 0;
  for (const auto& c : g.domain().param().components) deg_phi = std::max(deg_phi, c.total_degree().value_or(0));
  Rat r(*deg_g, deg_phi);
  r.canonicalize();
  return r;
}

std::vector<LocalMultiplicity> local_multiplicities(const CAMap& f, std::span<const Rat> y0, std::uint64_t seed,
                                                    unsigned prec) {
  check_supported(f);
  if (f.size() != param_dim(f)) throw Error(ErrorKind::InvalidArgument, "local multiplicity needs k = n");
  Fiber fiber;
  try {
    fiber = compute_fiber(f, y0, prec);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotProper) throw Error(ErrorKind::NotIsolated, "fibre over y0 is not finite");
    throw;
  }
  if (fiber.points.empty()) return {};
  PrecisionScope scope(prec);

  Rat scale(1);
  for (const auto& v : y0) scale = std::max(scale, Rat(abs(v)));
  Rat eps = scale;
  mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), prec / 8);

  std::optional<std::vector<int>> reference;
  for (int draw = 0; draw < kPerturbDraws; ++draw) {
    Rng rng(seed, {stream::kPerturb, static_cast<std::uint64_t>(draw)});
    std::vector<Rat> y(y0.begin(), y0.end());
    for (auto& yi : y) {
      long v = 0;
      while (v == 0) v = rng.integer(-100, 100);
      yi += eps * Rat(v, 100);
    }
    std::vector<int> counts(fiber.points.size(), 0);
    for (const auto& [s, mult] : solve_params(f, y, prec)) {
      std::size_t best_point = 0;
      std::optional<Real> best;
      for (std::size_t i = 0; i < fiber.points.size(); ++i) {
        for (const auto& base : fiber.points[i].params) {
          const Real d = distance(s, base);
          if (!best || d < *best) {
            best = d;
            best_point = i;
          }
        }
      }
      counts[best_point] += mult;
    }
    if (reference && *reference != counts) {
      throw Error(ErrorKind::PrecisionExhausted, "perturbed fibre counts are unstable");
    }
    reference = counts;
  }

  std::vector<LocalMultiplicity> out;
  for (std::size_t i = 0; i < fiber.points.size(); ++i) out.push_back({fiber.points[i], (*reference)[i]});
  return out;
}

std::vector<Rat> value_at(const CAMap& f, std::span<const Rat> a) {
  const Variety& dom = f.domain();
  if (a.size() != dom.ambient_dim()) throw Error(ErrorKind::LengthMismatch, "point has wrong length");
  if (!dom.contains(a)) throw Error(ErrorKind::InvalidArgument, "point is not on A");
  std::vector<Rat> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& c = f.components()[i];
    const Rat den = c.den.evaluate(a);
    if (den != 0) {
      out.push_back(c.num.evaluate(a) / den);
      continue;
    }
    if (dom.param().param_count() != 1) {
      throw Error(ErrorKind::Unsupported, "indeterminate value needs a curve parametrization");
    }
    // Continuous extension: f_i∘φ is constant on the parameters over a.
    MPoly g(1);
    const auto& phi = dom.param().components;
    for (std::size_t j = 0; j < phi.size(); ++j) {
      const MPoly eq = phi[j] - MPoly::constant(1, a[j]);
      g = g.is_zero() ? eq : gcd_univariate(g, eq);
    }
    if (g.is_zero() || g.is_constant()) throw Error(ErrorKind::InvalidArgument, "point has no parameter preimage");
    const MPoly radical = exact_divide(g, gcd_univariate(g, g.derivative(0)));
    const MPoly r = remainder_univariate(f.pullbacks()[i], radical);
    if (!r.is_constant()) throw Error(ErrorKind::NotCAlgebraic, "map is not single-valued at the point");
    out.push_back(r.constant_term());
  }
  return out;
}

int local_multiplicity(const CAMap& f, std::span<const Rat> a, std::uint64_t seed, unsigned prec) {
  const auto y0 = value_at(f, a);
  const auto lm = local_multiplicities(f, y0, seed, prec);
  PrecisionScope scope(prec);
  CPoint target;
  for (const auto& q : a) target.push_back(to_cfloat(q));
  const Real tol = default_cluster_tolerance(prec, max_abs(target));
  for (const auto& m : lm) {
    if (distance(m.point.point, target) <= tol) return m.multiplicity;
  }
  throw Error(ErrorKind::InvalidArgument, "point not found in its fibre");
}

StollCheck stoll_check(const CAMap& f, std::span<const Rat> y0, std::uint64_t seed, unsigned prec) {
  StollCheck out;
  out.lhs = geometric_degree(f, seed, prec);
  for (const auto& m : local_multiplicities(f, y0, seed, prec)) out.rhs += static_cast<std::size_t>(m.multiplicity);
  out.ok = out.lhs == out.rhs;
  return out;
}

std::size_t image_degree(const CAMap& f, std::uint64_t seed, unsigned prec) {
  check_supported(f);
  require_proper(f);
  if (param_dim(f) == 2) return 1;
  return parametrized_degree(f.pullbacks(), 1, seed, prec);
}

std::size_t graph_degree(const CAMap& f, std::uint64_t seed, unsigned prec) {
  std::vector<MPoly> comps = f.domain().param().components;
  const auto& pulls = f.pullbacks();
  comps.insert(comps.end(), pulls.begin(), pulls.end());
  return parametrized_degree(comps, param_dim(f), seed, prec);
}

ProperMapProfile profile(const CAMap& f, std::uint64_t seed, unsigned prec, bool with_image_degree) {
  ProperMapProfile out;
  out.witness = properness_witness(f);
  if (!out.witness.proper) throw Error(ErrorKind::NotProper, out.witness.evidence);
  out.d_f = geometric_degree(f, seed, prec);
  out.graph_degree = graph_degree(f, seed, prec);
  if (with_image_degree) out.image_degree = image_degree(f, seed, prec);
  return out;
}

}  // namespace cnull
