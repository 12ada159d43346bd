#include "cnull/nullcert.hpp"

#include <map>

#include "cnull/charpoly.hpp"
#include "cnull/error.hpp"
#include "cnull/json_io.hpp"
#include "cnull/linear_algebra.hpp"
#include "cnull/proper_map.hpp"
#include "cnull/random.hpp"
#include "cnull/roots.hpp"

namespace cnull {

namespace {

constexpr int kProjectionBudget = 5;
constexpr int kAffineFormBudget = 5;
constexpr long kGenericHeight = 100;

std::size_t param_dim(const CAMap& f) { return f.domain().param().param_count(); }

MPoly t_power(std::size_t vars, std::size_t t_index, unsigned e) {
  Exponent x(vars, 0);
  x[t_index] = e;
  return MPoly::monomial(x, Rat(1));
}

// Pullback along φ of an ambient polynomial.
MPoly pull(const MPoly& ambient, const Variety& dom) {
  return compose(ambient, dom.param().components);
}

void append_diag(std::string& diag, const std::string& line) {
  if (!diag.empty()) diag += "; ";
  diag += line;
}

// g must vanish at each point of f⁻¹(0) (numeric check at working precision).
void check_vanishing_on_zero_fiber(const CAMap& f, const CAMap& g, unsigned prec) {
  const std::vector<Rat> zero(f.size(), Rat(0));
  const Fiber fiber = compute_fiber(f, zero, prec);
  PrecisionScope scope(prec);
  const MPoly& gp = g.pullbacks().front();
  for (const auto& fp : fiber.points) {
    for (const auto& s : fp.params) {
      const Real scale = boost::multiprecision::max(Real(1), evaluate_abs(gp, s));
      if (abs(evaluate(gp, s)) > default_cluster_tolerance(prec, scale)) {
        throw Error(ErrorKind::VanishingHypothesisFailed, "g does not vanish on f^-1(0)");
      }
    }
  }
}

// h_i(y, t) = −Σ_j a_{j,i}(y) t^(d−j) for i < ell, zero for the rest.
std::vector<MPoly> certificate_from_charpoly(const CharPoly& p, std::size_t ell) {
  const std::size_t k = p.var_count;
  const std::size_t vars = k + 1;
  std::vector<MPoly> h(k, MPoly(vars));
  for (std::size_t j = 1; j <= p.d; ++j) {
    const auto parts = split_coeff(p.coeffs[j - 1], ell);
    const MPoly tp = t_power(vars, k, static_cast<unsigned>(p.d - j));
    for (std::size_t i = 0; i < ell; ++i) {
      MPoly wide(vars);
      for (const auto& [e, c] : parts[i].terms()) {
        Exponent w = e;
        w.push_back(0);
        wide.add_term(w, c);
      }
      h[i] -= wide * tp;
    }
  }
  return h;
}

void enumerate_monomials(std::size_t vars, unsigned cap, Exponent& cur, std::size_t i, unsigned left,
                         std::vector<Exponent>& out) {
  if (i == vars) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= left; ++e) {
    cur[i] = e;
    enumerate_monomials(vars, cap, cur, i + 1, left - e, out);
  }
  cur[i] = 0;
}

std::vector<MPoly> as_ring(const std::vector<MPoly>& pullbacks, const MPoly& g_pull) {
  std::vector<MPoly> subs = pullbacks;
  subs.push_back(g_pull);
  return subs;
}

}  // namespace

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::Proper: return "proper";
    case Theorem::Partial: return "partial";
    case Theorem::General: return "general";
    case Theorem::StrictlyRegular: return "strictly_regular";
    case Theorem::Fallback: return "fallback";
  }
  return "unknown";
}

Theorem theorem_from_string(const std::string& name) {
  for (Theorem t : {Theorem::Proper, Theorem::Partial, Theorem::General, Theorem::StrictlyRegular,
                    Theorem::Fallback}) {
    if (to_string(t) == name) return t;
  }
  throw Error(ErrorKind::SchemaError, "unknown theorem \"" + name + "\"");
}

std::vector<MPoly> split_coeff(const MPoly& a, std::size_t ell) {
  const std::size_t k = a.var_count();
  if (ell == 0 || ell > k) throw Error(ErrorKind::InvalidArgument, "ell must lie in 1..k");
  std::vector<MPoly> parts(ell, MPoly(k));
  for (const auto& [e, c] : a.terms()) {
    std::size_t i = 0;
    while (i < ell && e[i] == 0) ++i;
    if (i == ell) {
      throw Error(ErrorKind::NotInIdeal, "monomial " + MPoly::monomial(e, c).to_string(indexed_names("y", k)) + " avoids y1..y" +
                                             std::to_string(ell));
    }
    Exponent lowered = e;
    lowered[i] -= 1;
    parts[i].add_term(lowered, c);
  }
  return parts;
}

Certificate certify_proper(const CAMap& f, const CAMap& g, std::uint64_t seed, unsigned prec) {
  if (f.size() != param_dim(f)) throw Error(ErrorKind::InvalidArgument, "proper case needs k = n");
  check_vanishing_on_zero_fiber(f, g, prec);
  const CharPoly p = build_charpoly(f, g, seed, {prec, {}});
  for (std::size_t j = 0; j < p.d; ++j) {
    if (p.coeffs[j].constant_term() != 0) {
      throw Error(ErrorKind::VanishingHypothesisFailed,
                  "a_" + std::to_string(j + 1) + "(0) = " + format_rat(p.coeffs[j].constant_term()) + " is nonzero");
    }
  }
  Certificate cert;
  cert.exponent = static_cast<unsigned>(p.d);
  cert.h = certificate_from_charpoly(p, f.size());
  cert.theorem = Theorem::Proper;
  cert.verified = verify_certificate(f, g, cert);
  if (!cert.verified) throw Error(ErrorKind::ExactVerificationFailed, "proper-case certificate does not verify");
  return cert;
}

Certificate certify_partial(const CAMap& f, std::size_t ell, const CAMap& g, std::uint64_t seed, unsigned prec) {
  if (f.size() != param_dim(f)) throw Error(ErrorKind::InvalidArgument, "partial case needs k = n");
  if (ell == 0 || ell > f.size()) throw Error(ErrorKind::InvalidArgument, "ell must lie in 1..k");
  const CharPoly p = build_charpoly(f, g, seed, {prec, {}});
  Certificate cert;
  cert.exponent = static_cast<unsigned>(p.d);
  cert.h = certificate_from_charpoly(p, ell);
  cert.theorem = Theorem::Partial;
  cert.verified = verify_certificate(f, g, cert);
  if (!cert.verified) throw Error(ErrorKind::ExactVerificationFailed, "partial-case certificate does not verify");
  return cert;
}

Certificate certify_general(const CAMap& f, const CAMap& g, std::uint64_t seed, unsigned prec) {
  const std::size_t k = param_dim(f);
  const std::size_t n = f.size();
  if (n == k) return certify_proper(f, g, seed, prec);
  if (n < k) throw Error(ErrorKind::InvalidArgument, "general case needs n >= k");

  const std::size_t d = geometric_degree(f, seed, prec);
  const std::size_t image = image_degree(f, seed, prec);
  const unsigned exponent = static_cast<unsigned>(d * image);
  std::string diag;

  for (int attempt = 0; attempt < kProjectionBudget; ++attempt) {
    Rng rng(seed, {stream::kProjection, static_cast<std::uint64_t>(attempt)});
    RatMatrix pi(k, std::vector<Rat>(n));
    for (auto& row : pi) {
      for (auto& v : row) v = rng.rational(kGenericHeight);
    }
    const CAMap reduced = f.linear_image(pi);
    try {
      const std::size_t d_reduced = geometric_degree(reduced, seed, prec);
      if (d_reduced != exponent) {
        append_diag(diag, "projection " + std::to_string(attempt) + ": d(pi∘f) = " + std::to_string(d_reduced) +
                              " differs from d(f)·deg f(A) = " + std::to_string(exponent));
        continue;
      }
      const Certificate inner = certify_proper(reduced, g, seed, prec);
      // h_i(y, t) = Σ_r pi[r][i] · h̃_r(pi·y, t).
      std::vector<MPoly> subs;
      for (std::size_t r = 0; r < k; ++r) {
        MPoly row(n + 1);
        for (std::size_t i = 0; i < n; ++i) row += pi[r][i] * MPoly::variable(n + 1, i);
        subs.push_back(std::move(row));
      }
      subs.push_back(MPoly::variable(n + 1, n));
      Certificate cert;
      cert.exponent = inner.exponent;
      cert.theorem = Theorem::General;
      cert.h.assign(n, MPoly(n + 1));
      for (std::size_t r = 0; r < k; ++r) {
        const MPoly expanded = compose(inner.h[r], subs);
        for (std::size_t i = 0; i < n; ++i) cert.h[i] += pi[r][i] * expanded;
      }
      cert.diagnostics = diag;
      cert.verified = verify_certificate(f, g, cert);
      if (cert.verified) return cert;
      append_diag(diag, "projection " + std::to_string(attempt) + ": expanded certificate does not verify");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::VanishingHypothesisFailed && e.kind() != ErrorKind::NotProper &&
          e.kind() != ErrorKind::InconsistentFiberCounts) {
        throw;
      }
      append_diag(diag, "projection " + std::to_string(attempt) + ": " + e.what());
    }
  }

  try {
    Certificate cert = certify_fallback(f, g, exponent, exponent);
    append_diag(diag, "linear search succeeded with N = " + std::to_string(cert.exponent));
    cert.diagnostics = diag;
    return cert;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoSolutionWithinCap) throw;
    append_diag(diag, std::string("linear search: ") + e.what());
  }
  throw Error(ErrorKind::VanishingHypothesisFailed, diag);
}

std::optional<Certificate> fallback_at_exponent(const CAMap& f, const CAMap& g, unsigned exponent,
                                                unsigned degree_cap) {
  const std::size_t n = f.size();
  const std::size_t vars = n + 1;
  const MPoly& gp = g.pullbacks().front();
  const auto subs = as_ring(f.pullbacks(), gp);

  std::vector<Exponent> monomials;
  Exponent cur(vars, 0);
  enumerate_monomials(vars, degree_cap, cur, 0, degree_cap, monomials);

  // Column (j, m) is f_j∘φ · m(f∘φ, g∘φ).
  std::vector<MPoly> columns;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& m : monomials) columns.push_back(f.pullbacks()[j] * compose(MPoly::monomial(m, Rat(1)), subs));
  }
  const MPoly target = gp.pow(exponent);

  std::map<Exponent, std::size_t, GrlexGreater> rows;
  auto row_of = [&](const Exponent& e) { return rows.try_emplace(e, rows.size()).first->second; };
  for (const auto& [e, c] : target.terms()) row_of(e);
  for (const auto& col : columns) {
    for (const auto& [e, c] : col.terms()) row_of(e);
  }
  RatMatrix a(rows.size(), std::vector<Rat>(columns.size()));
  std::vector<Rat> b(rows.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [e, v] : columns[c].terms()) a[rows.at(e)][c] = v;
  }
  for (const auto& [e, v] : target.terms()) b[rows.at(e)] = v;

  const auto sol = solve_linear_system(std::move(a), std::move(b));
  if (!sol) return std::nullopt;
  Certificate cert;
  cert.exponent = exponent;
  cert.theorem = Theorem::Fallback;
  cert.h.assign(n, MPoly(vars));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t m = 0; m < monomials.size(); ++m) cert.h[j].add_term(monomials[m], (*sol)[j * monomials.size() + m]);
  }
  cert.verified = verify_certificate(f, g, cert);
  if (!cert.verified) return std::nullopt;
  return cert;
}

Certificate certify_fallback(const CAMap& f, const CAMap& g, unsigned max_exponent, unsigned degree_cap) {
  if (max_exponent < 1) throw Error(ErrorKind::InvalidArgument, "exponent bound must be at least 1");
  for (unsigned e = 1; e <= max_exponent; ++e) {
    if (auto cert = fallback_at_exponent(f, g, e, degree_cap)) return *cert;
  }
  throw Error(ErrorKind::NoSolutionWithinCap, "no certificate with N <= " + std::to_string(max_exponent) +
                                                  " and degree <= " + std::to_string(degree_cap));
}

CycleData point_cycle_degree(const CAMap& f, std::uint64_t seed, unsigned prec) {
  if (f.size() != param_dim(f)) throw Error(ErrorKind::InvalidArgument, "point cycle needs k = n");
  const std::vector<Rat> zero(f.size(), Rat(0));
  CycleData out;
  for (const auto& lm : local_multiplicities(f, zero, seed, prec)) {
    CycleComponent c;
    c.point = lm.point.point;
    c.multiplicity = lm.multiplicity;
    c.degree = 1;
    out.total_degree += static_cast<std::size_t>(c.multiplicity);
    out.components.push_back(std::move(c));
  }
  return out;
}

std::vector<MPoly> choose_affine_forms(const CAMap& f, std::uint64_t seed) {
  const std::size_t k = param_dim(f);
  const std::size_t n = f.size();
  if (n >= k) return {};
  const std::size_t m = f.domain().ambient_dim();
  for (int attempt = 0; attempt < kAffineFormBudget; ++attempt) {
    Rng rng(seed, {stream::kAffineForms, static_cast<std::uint64_t>(attempt)});
    std::vector<MPoly> forms;
    for (std::size_t r = 0; r < k - n; ++r) {
      MPoly form = MPoly::constant(m, rng.rational(kGenericHeight));
      for (std::size_t i = 0; i < m; ++i) form += rng.rational(kGenericHeight) * MPoly::variable(m, i);
      forms.push_back(std::move(form));
    }
    const CAMap extended = f.concat(CAMap::polynomial(f.domain_ptr(), forms));
    if (properness_witness(extended).proper) return forms;
  }
  throw Error(ErrorKind::NotStrictlyRegular, "no proper (f, L) among random affine forms");
}

CycleData cycle_degree(const CAMap& f, const std::vector<std::shared_ptr<const Variety>>& components,
                       const std::vector<MPoly>& affine_forms, std::uint64_t seed, unsigned prec,
                       const std::optional<std::vector<int>>& multiplicities) {
  const std::size_t k = param_dim(f);
  if (f.size() + affine_forms.size() != k) {
    throw Error(ErrorKind::InvalidArgument, "need k − n affine forms");
  }
  if (multiplicities && multiplicities->size() != components.size()) {
    throw Error(ErrorKind::LengthMismatch, "one multiplicity per component");
  }
  const CAMap extended = f.concat(CAMap::polynomial(f.domain_ptr(), affine_forms));
  const auto witness = properness_witness(extended);
  if (!witness.proper) throw Error(ErrorKind::NotStrictlyRegular, witness.evidence);

  CycleData out;
  for (std::size_t j = 0; j < components.size(); ++j) {
    const auto& v = components[j];
    if (v->ambient_dim() != f.domain().ambient_dim()) {
      throw Error(ErrorKind::VariableCountMismatch, "component lives in a different ambient space");
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!pull(f.components()[i].num, *v).is_zero()) {
        throw Error(ErrorKind::ComponentNotInFiber, "component " + std::to_string(j + 1) + " is not in f^-1(0)");
      }
    }
    CycleComponent c;
    c.variety = v;
    c.degree = degree_by_slicing(*v, seed, prec);
    if (multiplicities) {
      c.multiplicity = (*multiplicities)[j];
      if (c.multiplicity < 1) throw Error(ErrorKind::InvalidArgument, "multiplicities must be positive");
    } else {
      const auto a = sample_point(*v, seed + j);
      c.multiplicity = local_multiplicity(extended, a, seed, prec);
    }
    out.total_degree += static_cast<std::size_t>(c.multiplicity) * c.degree;
    out.components.push_back(std::move(c));
  }
  return out;
}

Certificate certify_strictly_regular(const CAMap& f, const CAMap& g, std::optional<std::vector<MPoly>> affine_forms,
                                     const std::optional<CycleData>& cycle, std::uint64_t seed, unsigned prec) {
  const std::size_t k = param_dim(f);
  const std::size_t n = f.size();
  if (n == k) return certify_proper(f, g, seed, prec);
  if (n > k) throw Error(ErrorKind::InvalidArgument, "strictly regular case needs n < k");
  if (!cycle) throw Error(ErrorKind::CycleDataUnavailable, "cycle of zeroes not supplied");

  const std::vector<MPoly> forms = affine_forms ? *affine_forms : choose_affine_forms(f, seed);
  if (forms.size() != k - n) throw Error(ErrorKind::InvalidArgument, "need k − n affine forms");
  const CAMap extended = f.concat(CAMap::polynomial(f.domain_ptr(), forms));
  const auto witness = properness_witness(extended);
  if (!witness.proper) throw Error(ErrorKind::NotStrictlyRegular, witness.evidence);

  const Certificate inner = certify_partial(extended, n, g, seed, prec);
  if (cycle->total_degree < inner.exponent) {
    throw Error(ErrorKind::InvalidArgument, "cycle degree " + std::to_string(cycle->total_degree) +
                                                " is below d(f, L) = " + std::to_string(inner.exponent));
  }
  const unsigned pad = static_cast<unsigned>(cycle->total_degree) - inner.exponent;
  Certificate cert;
  cert.exponent = static_cast<unsigned>(cycle->total_degree);
  cert.theorem = Theorem::StrictlyRegular;
  cert.aux = forms;
  const MPoly padding = t_power(k + 1, k, pad);
  for (std::size_t i = 0; i < n; ++i) cert.h.push_back(inner.h[i] * padding);
  cert.diagnostics = "d(f, L) = " + std::to_string(inner.exponent) + ", padded by g^" + std::to_string(pad);
  cert.verified = verify_certificate(f, g, cert);
  if (!cert.verified) throw Error(ErrorKind::ExactVerificationFailed, "strictly regular certificate does not verify");
  return cert;
}

bool verify_certificate(const CAMap& f, const CAMap& g, const Certificate& cert) {
  const std::size_t n = f.size();
  if (g.size() != 1 || cert.h.size() != n) return false;
  const std::size_t vars = n + cert.aux.size() + 1;
  const std::size_t m = f.domain().ambient_dim();
  std::vector<MPoly> subs = f.pullbacks();
  for (const auto& a : cert.aux) {
    if (a.var_count() != m) return false;
    subs.push_back(pull(a, f.domain()));
  }
  const MPoly& gp = g.pullbacks().front();
  subs.push_back(gp);
  MPoly residual = gp.pow(cert.exponent);
  for (std::size_t j = 0; j < n; ++j) {
    if (cert.h[j].var_count() != vars) return false;
    residual -= f.pullbacks()[j] * compose(cert.h[j], subs);
  }
  return residual.is_zero();
}

std::vector<std::string> certificate_symbols(std::size_t n, std::size_t aux) {
  auto names = indexed_names("y", n);
  const auto z = indexed_names("z", aux);
  names.insert(names.end(), z.begin(), z.end());
  names.push_back("t");
  return names;
}

nlohmann::json certificate_to_json(const Certificate& cert, std::size_t n, const std::vector<std::string>& ambient_vars) {
  const auto symbols = certificate_symbols(n, cert.aux.size());
  nlohmann::json h = nlohmann::json::array();
  nlohmann::json rendered = nlohmann::json::array();
  for (const auto& p : cert.h) {
    h.push_back(poly_to_json(p, symbols));
    rendered.push_back(p.to_string(symbols));
  }
  nlohmann::json aux = nlohmann::json::array();
  for (const auto& a : cert.aux) aux.push_back(poly_to_json(a, ambient_vars));
  return {{"N", cert.exponent},     {"theorem", to_string(cert.theorem)}, {"h", h},
          {"h_text", rendered},     {"aux", aux},                         {"verified", cert.verified},
          {"diagnostics", cert.diagnostics}};
}

Certificate certificate_from_json(const nlohmann::json& j, std::size_t n, const std::vector<std::string>& ambient_vars) {
  if (!j.is_object() || !j.contains("N") || !j.contains("h") || !j.at("h").is_array() ||
      !j.at("N").is_number_integer() || j.at("N").get<long long>() < 0) {
    throw Error(ErrorKind::SchemaError, "certificate needs unsigned \"N\" and array \"h\"");
  }
  Certificate cert;
  cert.exponent = j.at("N").get<unsigned>();
  if (j.contains("theorem")) {
    if (!j.at("theorem").is_string()) throw Error(ErrorKind::SchemaError, "\"theorem\" must be a string");
    cert.theorem = theorem_from_string(j.at("theorem").get<std::string>());
  }
  if (j.contains("aux")) {
    if (!j.at("aux").is_array()) throw Error(ErrorKind::SchemaError, "\"aux\" must be an array");
    for (const auto& a : j.at("aux")) cert.aux.push_back(poly_from_json(a, ambient_vars));
  }
  if (j.at("h").size() != n) {
    throw Error(ErrorKind::SchemaError, "certificate has " + std::to_string(j.at("h").size()) + " h entries, map has " +
                                            std::to_string(n) + " components");
  }
  const auto symbols = certificate_symbols(n, cert.aux.size());
  for (const auto& p : j.at("h")) cert.h.push_back(poly_from_json(p, symbols));
  if (j.contains("diagnostics") && j.at("diagnostics").is_string()) cert.diagnostics = j.at("diagnostics");
  return cert;
}

}  // namespace cnull
