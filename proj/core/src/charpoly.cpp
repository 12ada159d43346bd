#include "cnull/charpoly.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <set>

#include "cnull/error.hpp"
#include "cnull/json_io.hpp"
#include "cnull/proper_map.hpp"
#include "cnull/random.hpp"
#include "cnull/roots.hpp"

namespace cnull {

namespace {

constexpr int kGridRedraws = 5;
constexpr long kNodeRange = 100;

// Same polynomial in a ring with `extra` additional trailing variables.
MPoly widen(const MPoly& p, std::size_t extra) {
  MPoly out(p.var_count() + extra);
  for (const auto& [e, c] : p.terms()) {
    Exponent w = e;
    w.resize(e.size() + extra, 0);
    out.add_term(w, c);
  }
  return out;
}

std::vector<std::vector<Rat>> random_grid(std::size_t vars, std::size_t nodes, Rng& rng) {
  if (nodes > static_cast<std::size_t>(2 * kNodeRange + 1)) {
    throw Error(ErrorKind::Unsupported, "degree bound too large for the integer grid");
  }
  std::vector<std::vector<Rat>> grid(vars);
  for (auto& axis : grid) {
    std::set<long> used;
    while (axis.size() < nodes) {
      const long v = rng.integer(-kNodeRange, kNodeRange);
      if (used.insert(v).second) axis.emplace_back(v);
    }
  }
  return grid;
}

std::vector<std::vector<Rat>> grid_points(const std::vector<std::vector<Rat>>& axes) {
  std::vector<std::vector<Rat>> points{{}};
  for (const auto& axis : axes) {
    std::vector<std::vector<Rat>> next;
    for (const auto& p : points) {
      for (const auto& v : axis) {
        auto q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  return points;
}

enum class Attempt { Ok, Critical, Numeric };

// Signed elementary symmetric functions of the g-values over each grid point,
// reconstructed as rationals. values[j][p] is a_{j+1} at points[p].
Attempt sample_coefficients(const CAMap& f, const MPoly& g_pull, std::size_t d,
                            const std::vector<std::vector<Rat>>& points, unsigned prec,
                            std::vector<std::vector<Rat>>& values) {
  PrecisionScope scope(prec);
  BigInt height_bound;
  mpz_ui_pow_ui(height_bound.get_mpz_t(), 10, prec / 16);
  values.assign(d, {});
  for (const auto& y : points) {
    Fiber fiber;
    try {
      fiber = compute_fiber(f, y, prec);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PrecisionExhausted) return Attempt::Critical;
      throw;
    }
    if (fiber.points.size() != d) return Attempt::Critical;
    std::vector<CFloat> sym(d + 1);
    sym[0] = CFloat{Real(1), Real(0)};
    for (const auto& fp : fiber.points) {
      const CFloat v = evaluate(g_pull, fp.params.front());
      for (std::size_t j = d; j >= 1; --j) sym[j] = sym[j] + sym[j - 1] * v;
    }
    for (std::size_t j = 1; j <= d; ++j) {
      const CFloat a = (j % 2 == 0) ? sym[j] : -sym[j];
      try {
        values[j - 1].push_back(rational_reconstruct(a, height_bound, prec));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NoReconstruction || e.kind() == ErrorKind::NonReal) return Attempt::Numeric;
        throw;
      }
    }
  }
  return Attempt::Ok;
}

bool annihilates(const CharPoly& p, const CAMap& f, const CAMap& g) {
  std::vector<MPoly> subs = f.pullbacks();
  subs.push_back(g.pullbacks().front());
  return compose(p.as_polynomial(), subs).is_zero();
}

}  // namespace

MPoly CharPoly::as_polynomial() const {
  const std::size_t n = var_count + 1;
  Exponent top(n, 0);
  top[var_count] = static_cast<std::uint32_t>(d);
  MPoly out = MPoly::monomial(top, Rat(1));
  for (std::size_t j = 1; j <= d && j <= coeffs.size(); ++j) {
    Exponent power(n, 0);
    power[var_count] = static_cast<std::uint32_t>(d - j);
    out += widen(coeffs[j - 1], 1) * MPoly::monomial(power, Rat(1));
  }
  return out;
}

std::string to_string(CharPolyProvenance p) {
  return p == CharPolyProvenance::Interpolated ? "interpolated" : "resultant";
}

std::vector<int> coefficient_bounds(std::size_t d, const Rat& growth, std::size_t graph_degree) {
  if (graph_degree < d) throw Error(ErrorKind::InvalidArgument, "graph degree below geometric degree");
  const Rat span(static_cast<long>(graph_degree - d + 1));
  std::vector<int> out;
  for (std::size_t j = 1; j <= d; ++j) {
    const Rat b = Rat(static_cast<long>(j)) * growth * span;
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    out.push_back(static_cast<int>(fl.get_si()));
  }
  return out;
}

CharPoly build_charpoly(const CAMap& f, const CAMap& g, std::uint64_t seed, const CharPolyOptions& opts) {
  check_precision(opts.prec);
  if (g.size() != 1) throw Error(ErrorKind::InvalidArgument, "g must have one component");
  const std::size_t k = f.domain().param().param_count();
  if (f.size() != k) throw Error(ErrorKind::InvalidArgument, "characteristic polynomial needs f with k components");
  if (!opts.grid_nodes.empty() && opts.grid_nodes.size() != k) {
    throw Error(ErrorKind::GridMalformed, "grid needs one node list per y variable");
  }

  CharPoly out;
  out.var_count = k;
  out.d = geometric_degree(f, seed, opts.prec);
  out.bounds = coefficient_bounds(out.d, growth_exponent(g), graph_degree(f, seed, opts.prec));
  const int max_bound = *std::max_element(out.bounds.begin(), out.bounds.end());
  const std::size_t nodes = static_cast<std::size_t>(max_bound) + 2;
  const MPoly& g_pull = g.pullbacks().front();

  bool saw_critical_only = true;
  for (unsigned prec : kPrecisionLadder) {
    if (prec < opts.prec) continue;
    for (int attempt = 0; attempt < kGridRedraws; ++attempt) {
      std::vector<std::vector<Rat>> axes = opts.grid_nodes;
      for (auto& axis : axes) {
        for (auto& node : axis) node.canonicalize();
      }
      if (axes.empty()) {
        Rng rng(seed, {stream::kGrid, static_cast<std::uint64_t>(attempt)});
        axes = random_grid(k, nodes, rng);
      }
      const auto points = grid_points(axes);
      std::vector<std::vector<Rat>> values;
      const Attempt res = sample_coefficients(f, g_pull, out.d, points, prec, values);
      if (res == Attempt::Critical) {
        if (!opts.grid_nodes.empty()) {
          throw Error(ErrorKind::CriticalSampleBudgetExhausted, "supplied grid contains a critical value");
        }
        continue;
      }
      saw_critical_only = false;
      if (res == Attempt::Numeric) break;

      out.coeffs.clear();
      bool consistent = true;
      for (std::size_t j = 0; j < out.d && consistent; ++j) {
        std::vector<Sample> samples;
        for (std::size_t p = 0; p < points.size(); ++p) samples.push_back({points[p], values[j][p]});
        const std::vector<int> degree_bounds(k, out.bounds[j]);
        try {
          out.coeffs.push_back(interpolate(samples, degree_bounds));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::InconsistentSamples) throw;
          consistent = false;
        }
      }
      if (consistent && annihilates(out, f, g)) {
        out.verified = true;
        return out;
      }
      break;
    }
    if (saw_critical_only) {
      throw Error(ErrorKind::CriticalSampleBudgetExhausted, "every grid drawn met a critical value");
    }
  }
  throw Error(ErrorKind::ExactVerificationFailed, "no interpolated polynomial annihilates (f, g) along φ");
}

CharPoly charpoly_resultant_oracle(const CAMap& f, const CAMap& g) {
  if (g.size() != 1 || f.size() != 1 || f.domain().param().param_count() != 1) {
    throw Error(ErrorKind::Unsupported, "resultant oracle needs k = n = 1");
  }
  const MPoly& fp = f.pullbacks().front();
  const MPoly& gp = g.pullbacks().front();
  if (fp.degree_in(0) < 1) throw Error(ErrorKind::NonMonicizable, "f∘φ is constant");
  // Ring (t, y, s).
  const MPoly lhs = widen(fp, 2) - MPoly::variable(3, 1);
  const MPoly rhs = MPoly::variable(3, 2) - widen(gp, 2);
  const MPoly res = resultant(lhs, rhs, 0);

  const auto by_s = coefficients_in(res, 2);
  const std::size_t d = by_s.size() - 1;
  const MPoly& lead = by_s.back();
  if (!lead.is_constant()) throw Error(ErrorKind::NonMonicizable, "leading coefficient depends on y");
  const Rat scale = Rat(1) / lead.constant_term();

  CharPoly out;
  out.d = d;
  out.var_count = 1;
  out.provenance = CharPolyProvenance::Resultant;
  for (std::size_t j = 1; j <= d; ++j) {
    MPoly a(1);
    for (const auto& [e, c] : by_s[d - j].terms()) a.add_term(Exponent{e[1]}, c * scale);
    out.coeffs.push_back(std::move(a));
  }
  out.verified = annihilates(out, f, g);
  return out;
}

Rat ploski_delta(const CharPoly& p) {
  Rat best(0);
  for (std::size_t j = 1; j <= p.coeffs.size(); ++j) {
    const auto deg = p.coeffs[j - 1].total_degree();
    if (!deg) continue;
    Rat r(*deg, static_cast<long>(j));
    r.canonicalize();
    best = std::max(best, r);
  }
  return best;
}

GrowthCheck growth_inclusion_check(const CharPoly& p, const Rat& q, double radius, int samples,
                                   std::uint64_t seed) {
  if (q <= 0) throw Error(ErrorKind::InvalidArgument, "q must be positive");
  if (!(radius > 1.0)) throw Error(ErrorKind::InvalidArgument, "R must exceed 1");
  if (samples < 1) throw Error(ErrorKind::InvalidArgument, "need at least one sample");
  constexpr unsigned kPrec = 128;
  constexpr int kDecades = 4;
  const double qd = q.get_d();
  const MPoly full = p.as_polynomial();
  const std::size_t k = p.var_count;

  Rng rng(seed, {stream::kGrowth});
  const double neg_inf = -std::numeric_limits<double>::infinity();
  std::vector<double> decade_max(kDecades, neg_inf);
  GrowthCheck out;
  double best = neg_inf;

  for (int s = 0; s < samples; ++s) {
    const double u = rng.uniform(0.0, 1.0);
    const double r = radius * std::pow(10.0, kDecades * u);
    std::vector<double> dir(k);
    if (k == 1) {
      dir[0] = rng.integer(0, 1) == 0 ? -1.0 : 1.0;
    } else {
      double norm = 0.0;
      while (norm == 0.0) {
        norm = 0.0;
        for (auto& v : dir) {
          v = rng.normal();
          norm += v * v;
        }
        norm = std::sqrt(norm);
      }
      for (auto& v : dir) v /= norm;
    }
    std::vector<Rat> x;
    std::vector<double> xd;
    double xnorm = 0.0;
    for (double v : dir) {
      x.emplace_back(v * r);
      xd.push_back(x.back().get_d());
      xnorm += xd.back() * xd.back();
    }
    xnorm = std::sqrt(xnorm);

    MPoly in_t(1);
    for (const auto& [e, c] : full.terms()) {
      Rat coeff = c;
      for (std::size_t i = 0; i < k; ++i) {
        Rat power(1);
        for (std::uint32_t m = 0; m < e[i]; ++m) power *= x[i];
        coeff *= power;
      }
      in_t.add_term(Exponent{e[k]}, coeff);
    }
    double max_t = 0.0;
    {
      PrecisionScope scope(kPrec);
      for (const auto& root : roots_univariate(in_t, kPrec).roots) {
        max_t = std::max(max_t, abs(root.value).convert_to<double>());
      }
    }
    const double log_ratio = max_t > 0.0 ? std::log(max_t) - qd * std::log(xnorm) : neg_inf;
    const int decade = std::min(kDecades - 1, static_cast<int>(kDecades * u));
    decade_max[decade] = std::max(decade_max[decade], log_ratio);
    if (out.witness_x.empty() || log_ratio > best) {
      best = log_ratio;
      out.witness_x = xd;
      out.witness_t = max_t;
    }
  }

  const double top = decade_max.back();
  const double bottom = decade_max.front();
  if (top == neg_inf) {
    out.excess_slope = 0.0;
  } else if (bottom == neg_inf) {
    out.excess_slope = std::numeric_limits<double>::infinity();
  } else {
    out.excess_slope = (top - bottom) / ((kDecades - 1) * std::log(10.0));
  }
  out.holds = out.excess_slope <= qd / 16.0;
  out.c = best == neg_inf ? DBL_MIN : std::exp(best);
  return out;
}

std::vector<BoundRow> check_bounds(const CharPoly& p) {
  if (p.bounds.size() != p.coeffs.size()) {
    throw Error(ErrorKind::InvalidArgument, "characteristic polynomial carries no degree bounds");
  }
  std::vector<BoundRow> rows;
  for (std::size_t j = 1; j <= p.coeffs.size(); ++j) {
    BoundRow row;
    row.j = j;
    row.degree = p.coeffs[j - 1].total_degree();
    row.bound = p.bounds[j - 1];
    row.ok = !row.degree || *row.degree <= row.bound;
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json charpoly_to_json(const CharPoly& p, const std::vector<std::string>& y_vars) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& a : p.coeffs) coeffs.push_back(poly_to_json(a, y_vars));
  nlohmann::json bounds = nlohmann::json::array();
  for (int b : p.bounds) bounds.push_back(b);
  std::vector<std::string> all = y_vars;
  all.push_back("t");
  return {{"d", p.d},
          {"coeffs", coeffs},
          {"provenance", to_string(p.provenance)},
          {"bounds", bounds},
          {"verified", p.verified},
          {"polynomial", p.as_polynomial().to_string(all)}};
}

}  // namespace cnull
