#include "cnull/variety.hpp"

#include <algorithm>

#include "cnull/error.hpp"
#include "cnull/json_io.hpp"
#include "cnull/random.hpp"
#include "cnull/roots.hpp"

namespace cnull {

using nlohmann::json;

Variety::Variety(std::vector<std::string> ambient_vars, std::size_t dim, std::vector<MPoly> generators,
                 std::optional<Parametrization> param)
    : ambient_vars_(std::move(ambient_vars)),
      dim_(dim),
      generators_(std::move(generators)),
      param_(std::move(param)) {
  const std::size_t m = ambient_vars_.size();
  if (m == 0) throw Error(ErrorKind::SchemaError, "variety needs at least one ambient variable");
  if (dim_ == 0 || dim_ > m) {
    throw Error(ErrorKind::SchemaError, "dimension must satisfy 1 <= k <= m");
  }
  for (const auto& g : generators_) {
    if (g.var_count() != m) throw Error(ErrorKind::SchemaError, "generator lives in the wrong ring");
  }
  if (!param_) return;
  if (param_->vars.size() != dim_) {
    throw Error(ErrorKind::SchemaError, "parametrization must have exactly k parameters");
  }
  if (param_->components.size() != m) {
    throw Error(ErrorKind::SchemaError, "parametrization must have one component per ambient variable");
  }
  bool any_nonconstant = false;
  for (const auto& c : param_->components) {
    if (c.var_count() != dim_) throw Error(ErrorKind::SchemaError, "parametrization component in the wrong ring");
    any_nonconstant = any_nonconstant || !c.is_constant();
  }
  if (!any_nonconstant) throw Error(ErrorKind::SchemaError, "parametrization is constant");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!compose(generators_[i], param_->components).is_zero()) {
      throw Error(ErrorKind::GeneratorNotAnnihilated,
                  "generator " + std::to_string(i + 1) + " does not vanish along the parametrization");
    }
  }
}

const Parametrization& Variety::param() const {
  if (!param_) throw Error(ErrorKind::MissingParametrization, "operation needs a parametrized variety");
  return *param_;
}

bool Variety::contains(std::span<const Rat> point) const {
  if (point.size() != ambient_dim()) throw Error(ErrorKind::LengthMismatch, "point has wrong length");
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const MPoly& g) { return g.evaluate(point) == 0; });
}

std::vector<Rat> Variety::point_at(std::span<const Rat> params) const {
  std::vector<Rat> out;
  for (const auto& c : param().components) out.push_back(c.evaluate(params));
  return out;
}

CPoint Variety::point_at(std::span<const CFloat> params) const {
  CPoint out;
  for (const auto& c : param().components) out.push_back(evaluate(c, params));
  return out;
}

Variety affine_space(std::vector<std::string> vars) {
  const std::size_t k = vars.size();
  Parametrization param{indexed_names("s", k), {}};
  for (std::size_t i = 0; i < k; ++i) param.components.push_back(MPoly::variable(k, i));
  return Variety(std::move(vars), k, {}, std::move(param));
}

CAMap::CAMap(std::shared_ptr<const Variety> domain, std::vector<RationalComponent> components)
    : domain_(std::move(domain)), components_(std::move(components)) {
  if (!domain_) throw Error(ErrorKind::InvalidArgument, "map needs a domain");
  const std::size_t m = domain_->ambient_dim();
  for (const auto& c : components_) {
    if (c.num.var_count() != m || c.den.var_count() != m) {
      throw Error(ErrorKind::SchemaError, "map component lives in the wrong ring");
    }
    if (c.den.is_zero()) throw Error(ErrorKind::SchemaError, "zero denominator");
  }
  if (!domain_->has_param()) return;
  const auto& phi = domain_->param().components;
  std::vector<MPoly> pulled;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const MPoly num = compose(components_[i].num, phi);
    const MPoly den = compose(components_[i].den, phi);
    if (den.is_zero()) {
      throw Error(ErrorKind::NotCAlgebraic,
                  "denominator of component " + std::to_string(i + 1) + " vanishes identically on A");
    }
    auto q = try_divide(num, den);
    if (!q) {
      throw Error(ErrorKind::NotCAlgebraic,
                  "component " + std::to_string(i + 1) + " does not extend continuously along the parametrization");
    }
    pulled.push_back(std::move(*q));
  }
  pullbacks_ = std::move(pulled);
}

CAMap CAMap::polynomial(std::shared_ptr<const Variety> domain, std::vector<MPoly> components) {
  std::vector<RationalComponent> comps;
  const std::size_t m = domain->ambient_dim();
  for (auto& p : components) comps.push_back({std::move(p), MPoly::constant(m, Rat(1))});
  return CAMap(std::move(domain), std::move(comps));
}

const std::vector<MPoly>& CAMap::pullbacks() const {
  if (!pullbacks_) throw Error(ErrorKind::MissingParametrization, "map domain has no parametrization");
  return *pullbacks_;
}

CAMap CAMap::linear_image(const RatMatrix& pi) const {
  const std::size_t m = domain_->ambient_dim();
  std::vector<RationalComponent> out;
  for (const auto& row : pi) {
    if (row.size() != components_.size()) throw Error(ErrorKind::LengthMismatch, "projection has wrong width");
    RationalComponent acc{MPoly(m), MPoly::constant(m, Rat(1))};
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      const auto& c = components_[i];
      if (c.den == acc.den) {
        acc.num += row[i] * c.num;
      } else {
        acc.num = acc.num * c.den + row[i] * c.num * acc.den;
        acc.den = acc.den * c.den;
      }
    }
    out.push_back(std::move(acc));
  }
  return CAMap(domain_, std::move(out));
}

CAMap CAMap::concat(const CAMap& other) const {
  if (other.domain_.get() != domain_.get()) {
    throw Error(ErrorKind::InvalidArgument, "maps have different domains");
  }
  auto comps = components_;
  comps.insert(comps.end(), other.components_.begin(), other.components_.end());
  return CAMap(domain_, std::move(comps));
}

CAMap CAMap::component(std::size_t i) const {
  if (i >= components_.size()) throw Error(ErrorKind::InvalidArgument, "component index out of range");
  return CAMap(domain_, {components_[i]});
}

const std::vector<MPoly>& pullback(const CAMap& map) { return map.pullbacks(); }

// --- JSON -------------------------------------------------------------------

namespace {

std::vector<std::string> read_names(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw Error(ErrorKind::SchemaError, std::string("missing array \"") + key + "\"");
  }
  std::vector<std::string> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_string()) throw Error(ErrorKind::SchemaError, std::string("\"") + key + "\" must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

Variety load_variety(const json& spec) {
  if (!spec.is_object()) throw Error(ErrorKind::SchemaError, "variety must be a JSON object");
  auto ambient = read_names(spec, "ambient_vars");
  if (!spec.contains("dim") || !spec.at("dim").is_number_unsigned()) {
    throw Error(ErrorKind::SchemaError, "missing positive integer \"dim\"");
  }
  const auto dim = spec.at("dim").get<std::size_t>();
  std::vector<MPoly> gens;
  if (spec.contains("generators")) {
    if (!spec.at("generators").is_array()) throw Error(ErrorKind::SchemaError, "\"generators\" must be an array");
    for (const auto& g : spec.at("generators")) gens.push_back(poly_from_json(g, ambient));
  }
  std::optional<Parametrization> param;
  if (spec.contains("param") && !spec.at("param").is_null()) {
    const auto& p = spec.at("param");
    if (!p.is_object()) throw Error(ErrorKind::SchemaError, "\"param\" must be an object");
    Parametrization par{read_names(p, "vars"), {}};
    if (!p.contains("components") || !p.at("components").is_array()) {
      throw Error(ErrorKind::SchemaError, "\"param\" needs a \"components\" array");
    }
    for (const auto& c : p.at("components")) par.components.push_back(poly_from_json(c, par.vars));
    param = std::move(par);
  }
  return Variety(std::move(ambient), dim, std::move(gens), std::move(param));
}

json variety_to_json(const Variety& v) {
  json gens = json::array();
  for (const auto& g : v.generators()) gens.push_back(poly_to_json(g, v.ambient_vars()));
  json out{{"ambient_vars", v.ambient_vars()}, {"dim", v.dim()}, {"generators", gens}};
  if (v.has_param()) {
    json comps = json::array();
    for (const auto& c : v.param().components) comps.push_back(poly_to_json(c, v.param().vars));
    out["param"] = {{"vars", v.param().vars}, {"components", comps}};
  }
  return out;
}

CAMap load_map(const json& spec, std::shared_ptr<const Variety> domain) {
  if (!spec.is_object() || !spec.contains("components") || !spec.at("components").is_array()) {
    throw Error(ErrorKind::SchemaError, "map needs a \"components\" array");
  }
  const auto& vars = domain->ambient_vars();
  std::vector<RationalComponent> comps;
  for (const auto& c : spec.at("components")) {
    if (!c.is_object() || !c.contains("num")) throw Error(ErrorKind::SchemaError, "component needs \"num\"");
    RationalComponent rc{poly_from_json(c.at("num"), vars), MPoly::constant(vars.size(), Rat(1))};
    if (c.contains("den")) rc.den = poly_from_json(c.at("den"), vars);
    comps.push_back(std::move(rc));
  }
  if (comps.empty()) throw Error(ErrorKind::SchemaError, "map has no components");
  return CAMap(std::move(domain), std::move(comps));
}

// --- degree and sampling ----------------------------------------------------

namespace {

constexpr int kSliceRounds = 3;
constexpr int kSliceAttempts = 5;
constexpr long kGenericHeight = 100;

// Random affine form λ·components − c in the parameter ring.
MPoly random_slice(std::span<const MPoly> components, Rng& rng) {
  MPoly h = MPoly::constant(components.front().var_count(), -rng.rational(kGenericHeight));
  for (const auto& c : components) h += rng.nonzero_rational(kGenericHeight) * c;
  return h;
}

std::size_t count_distinct(std::span<const MPoly> components, const std::vector<CPoint>& params, unsigned prec) {
  std::vector<CPoint> pts;
  for (const auto& s : params) {
    CPoint p;
    for (const auto& c : components) p.push_back(evaluate(c, s));
    pts.push_back(std::move(p));
  }
  Real scale = 1;
  for (const auto& p : pts) scale = boost::multiprecision::max(scale, max_abs(p));
  return cluster(std::span<const CPoint>(pts), default_cluster_tolerance(prec, scale)).size();
}

std::optional<std::size_t> try_slice(std::span<const MPoly> components, std::size_t k, Rng& rng, unsigned prec) {
  std::vector<CPoint> params;
  if (k == 1) {
    const MPoly h = random_slice(components, rng);
    if (h.is_constant()) return std::nullopt;
    const auto rs = roots_univariate(h, prec);
    for (const auto& r : rs.roots) {
      if (r.multiplicity > 1) return std::nullopt;  // tangent slice
      params.push_back(CPoint{r.value});
    }
  } else if (k == 2) {
    const MPoly h1 = random_slice(components, rng);
    const MPoly h2 = random_slice(components, rng);
    try {
      params = solve_system_2(h1, h2, prec);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NonZeroDimensional) return std::nullopt;
      throw;
    }
  } else {
    throw Error(ErrorKind::Unsupported, "slicing is implemented for 1- and 2-parameter families");
  }
  return count_distinct(components, params, prec);
}

}  // namespace

std::size_t parametrized_degree(std::span<const MPoly> components, std::size_t param_count, std::uint64_t seed,
                                unsigned prec) {
  check_precision(prec);
  if (components.empty()) throw Error(ErrorKind::InvalidArgument, "no components");
  PrecisionScope scope(prec);
  std::optional<std::size_t> best;
  for (int round = 0; round < kSliceRounds; ++round) {
    for (int attempt = 0; attempt < kSliceAttempts; ++attempt) {
      Rng rng(seed, {stream::kSlice, static_cast<std::uint64_t>(round), static_cast<std::uint64_t>(attempt)});
      if (auto count = try_slice(components, param_count, rng, prec)) {
        best = std::max(best.value_or(0), *count);
        break;
      }
    }
  }
  if (!best) throw Error(ErrorKind::DegenerateSlice, "every random slice was degenerate");
  return *best;
}

std::size_t degree_by_slicing(const Variety& v, std::uint64_t seed, unsigned prec) {
  const auto& param = v.param();
  return parametrized_degree(param.components, param.param_count(), seed, prec);
}

std::vector<Rat> sample_point(const Variety& v, std::uint64_t seed) {
  Rng rng(seed, {stream::kSamplePoint});
  std::vector<Rat> s;
  for (std::size_t i = 0; i < v.param().param_count(); ++i) s.push_back(rng.rational(kGenericHeight));
  return v.point_at(s);
}

}  // namespace cnull
