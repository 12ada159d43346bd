#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "cnull/charpoly.hpp"
#include "cnull/error.hpp"
#include "cnull/gradexp.hpp"
#include "cnull/json_io.hpp"
#include "cnull/nullcert.hpp"
#include "cnull/proper_map.hpp"
#include "cnull/variety.hpp"

namespace cnull::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string variety;
  std::string f;
  std::string g;
  std::string cert;
  std::string forms;
  std::string out;
  std::string format = "json";
  std::string theorem = "auto";
  std::string q;
  std::uint64_t seed = 0;
  unsigned prec = kDefaultPrecision;
  std::size_t ell = 0;
  unsigned exponent = 0;
  unsigned degree_cap = 0;
  std::size_t cycle_total = 0;
  double radius = 100.0;
  int samples = 0;
  bool oracle = false;
  std::vector<std::string> y;
  std::vector<std::string> components;
  std::vector<int> multiplicities;
  std::vector<double> shells;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PrecisionExhausted:
    case ErrorKind::NoReconstruction:
      return kPrecision;
    case ErrorKind::SchemaError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::LengthMismatch:
    case ErrorKind::VariableCountMismatch:
    case ErrorKind::GridMalformed:
      return kInput;
    default:
      return kHypothesis;
  }
}

json read_json(const std::string& path, const char* what) {
  if (path.empty()) throw Error(ErrorKind::SchemaError, std::string("missing --") + what + " file");
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SchemaError, path + ": " + e.what());
  }
}

json rat_json(const Rat& r) { return {{"exact", format_rat(r)}, {"float", r.get_d()}}; }

json point_json(const CPoint& p) {
  json out = json::array();
  for (const auto& z : p) out.push_back({z.re.convert_to<double>(), z.im.convert_to<double>()});
  return out;
}

struct Loaded {
  std::shared_ptr<const Variety> domain;
  std::optional<CAMap> f;
  std::optional<CAMap> g;
};

Loaded load(const Options& o, bool need_f, bool need_g) {
  Loaded l;
  l.domain = std::make_shared<const Variety>(load_variety(read_json(o.variety, "variety")));
  if (need_f) l.f = load_map(read_json(o.f, "f"), l.domain);
  if (need_g) {
    l.g = load_map(read_json(o.g, "g"), l.domain);
    if (l.g->size() != 1) throw Error(ErrorKind::SchemaError, "g must have exactly one component");
  }
  return l;
}

std::vector<Rat> parse_point(const std::vector<std::string>& text) {
  std::vector<Rat> out;
  for (const auto& s : text) out.push_back(parse_rat(s));
  return out;
}

std::optional<std::vector<MPoly>> load_forms(const Options& o, const Variety& v) {
  if (o.forms.empty()) return std::nullopt;
  const json j = read_json(o.forms, "L");
  if (!j.is_object() || !j.contains("forms") || !j.at("forms").is_array()) {
    throw Error(ErrorKind::SchemaError, "affine forms file needs a \"forms\" array");
  }
  std::vector<MPoly> forms;
  for (const auto& p : j.at("forms")) {
    forms.push_back(poly_from_json(p, v.ambient_vars()));
    const auto deg = forms.back().total_degree();
    if (deg && *deg > 1) throw Error(ErrorKind::SchemaError, "L must consist of affine forms");
  }
  return forms;
}

std::vector<std::shared_ptr<const Variety>> load_components(const Options& o) {
  std::vector<std::shared_ptr<const Variety>> out;
  for (const auto& path : o.components) {
    out.push_back(std::make_shared<const Variety>(load_variety(read_json(path, "components"))));
  }
  return out;
}

json cycle_json(const CycleData& c) {
  json comps = json::array();
  for (const auto& comp : c.components) {
    json entry = {{"multiplicity", comp.multiplicity}, {"degree", comp.degree}};
    if (comp.variety) {
      entry["variety"] = variety_to_json(*comp.variety);
    } else {
      entry["point"] = point_json(comp.point);
    }
    comps.push_back(std::move(entry));
  }
  return {{"components", comps}, {"total_degree", c.total_degree}};
}

CycleData resolve_cycle(const Options& o, const CAMap& f, const std::vector<MPoly>& forms) {
  const std::size_t k = f.domain().param().param_count();
  if (f.size() == k) return point_cycle_degree(f, o.seed, o.prec);
  if (o.components.empty()) throw Error(ErrorKind::CycleDataUnavailable, "pass --components or --cycle-degree");
  std::optional<std::vector<int>> mults;
  if (!o.multiplicities.empty()) mults = o.multiplicities;
  return cycle_degree(f, load_components(o), forms, o.seed, o.prec, mults);
}

// --- commands ---------------------------------------------------------------

json cmd_degree(const Options& o) {
  const Variety v = load_variety(read_json(o.variety, "variety"));
  return {{"degree", degree_by_slicing(v, o.seed, o.prec)}, {"dim", v.dim()}, {"ambient_dim", v.ambient_dim()}};
}

json cmd_geomdeg(const Options& o) {
  const auto l = load(o, true, false);
  const CAMap& f = *l.f;
  const auto witness = properness_witness(f);
  if (!witness.proper) throw Error(ErrorKind::NotProper, witness.evidence);
  json r = {{"d_f", geometric_degree(f, o.seed, o.prec)},
            {"graph_degree", graph_degree(f, o.seed, o.prec)},
            {"image_degree", image_degree(f, o.seed, o.prec)},
            {"properness_witness", witness.evidence}};
  if (!o.y.empty()) {
    const auto y = parse_point(o.y);
    const Fiber fiber = compute_fiber(f, y, o.prec);
    json pts = json::array();
    for (const auto& fp : fiber.points) pts.push_back(point_json(fp.point));
    r["fiber"] = {{"y", o.y}, {"count", fiber.points.size()}, {"points", pts}};
    if (f.size() == f.domain().param().param_count()) {
      const auto s = stoll_check(f, y, o.seed, o.prec);
      r["stoll"] = {{"lhs", s.lhs}, {"rhs", s.rhs}, {"ok", s.ok}};
    }
  }
  return r;
}

CharPoly charpoly_for(const Options& o, const Loaded& l) {
  if (o.oracle) return charpoly_resultant_oracle(*l.f, *l.g);
  return build_charpoly(*l.f, *l.g, o.seed, {o.prec, {}});
}

std::vector<std::string> y_names(const CAMap& f) { return indexed_names("y", f.size()); }

json cmd_charpoly(const Options& o) {
  const auto l = load(o, true, true);
  const CharPoly p = charpoly_for(o, l);
  json r = charpoly_to_json(p, y_names(*l.f));
  r["delta"] = rat_json(ploski_delta(p));
  return r;
}

json cmd_ploski(const Options& o) {
  const auto l = load(o, true, true);
  const CharPoly p = charpoly_for(o, l);
  const Rat delta = ploski_delta(p);
  Rat q = o.q.empty() ? delta : parse_rat(o.q);
  if (q == 0) q = 1;
  const int samples = o.samples > 0 ? o.samples : 1000;
  const auto check = growth_inclusion_check(p, q, o.radius, samples, o.seed);
  return {{"delta", rat_json(delta)},
          {"q", rat_json(q)},
          {"R", o.radius},
          {"samples", samples},
          {"holds", check.holds},
          {"C", check.c},
          {"excess_slope", check.excess_slope},
          {"witness", {{"x", check.witness_x}, {"abs_t", check.witness_t}}}};
}

json cmd_check_bounds(const Options& o) {
  const auto l = load(o, true, true);
  const CharPoly p = build_charpoly(*l.f, *l.g, o.seed, {o.prec, {}});
  json rows = json::array();
  bool all_ok = true;
  for (const auto& row : check_bounds(p)) {
    rows.push_back({{"j", row.j},
                    {"degree", row.degree ? json(*row.degree) : json("-inf")},
                    {"bound", row.bound},
                    {"ok", row.ok}});
    all_ok = all_ok && row.ok;
  }
  return {{"rows", rows}, {"ok", all_ok}, {"d", p.d}};
}

json cmd_certify(const Options& o) {
  const auto l = load(o, true, true);
  const CAMap& f = *l.f;
  const CAMap& g = *l.g;
  const std::size_t k = f.domain().param().param_count();
  const std::size_t n = f.size();
  std::string theorem = o.theorem;
  if (theorem == "auto") {
    if (n > k) {
      theorem = "general";
    } else if (n < k) {
      theorem = "strictly_regular";
    } else {
      theorem = (o.ell != 0 && o.ell < n) ? "partial" : "proper";
    }
  }
  Certificate cert;
  switch (theorem_from_string(theorem)) {
    case Theorem::Proper: cert = certify_proper(f, g, o.seed, o.prec); break;
    case Theorem::Partial: cert = certify_partial(f, o.ell == 0 ? n : o.ell, g, o.seed, o.prec); break;
    case Theorem::General: cert = certify_general(f, g, o.seed, o.prec); break;
    case Theorem::Fallback: {
      if (o.exponent == 0) throw Error(ErrorKind::InvalidArgument, "fallback needs --N");
      cert = certify_fallback(f, g, o.exponent, o.degree_cap == 0 ? o.exponent : o.degree_cap);
      break;
    }
    case Theorem::StrictlyRegular: {
      auto forms = load_forms(o, f.domain());
      if (n < k && !forms) forms = choose_affine_forms(f, o.seed);
      std::optional<CycleData> cycle;
      if (o.cycle_total > 0) {
        cycle = CycleData{{}, o.cycle_total};
      } else if (n < k && !o.components.empty()) {
        cycle = resolve_cycle(o, f, *forms);
      }
      cert = certify_strictly_regular(f, g, forms, cycle, o.seed, o.prec);
      break;
    }
  }
  return certificate_to_json(cert, n, f.domain().ambient_vars());
}

json cmd_verify(const Options& o) {
  const auto l = load(o, true, true);
  const Certificate cert = certificate_from_json(read_json(o.cert, "cert"), l.f->size(), l.domain->ambient_vars());
  return {{"verified", verify_certificate(*l.f, *l.g, cert)}, {"N", cert.exponent}, {"theorem", to_string(cert.theorem)}};
}

json cmd_cycle(const Options& o) {
  const auto l = load(o, true, false);
  const CAMap& f = *l.f;
  std::vector<MPoly> forms;
  if (f.size() < f.domain().param().param_count()) {
    auto given = load_forms(o, f.domain());
    forms = given ? *given : choose_affine_forms(f, o.seed);
  }
  json r = cycle_json(resolve_cycle(o, f, forms));
  json fj = json::array();
  for (const auto& p : forms) fj.push_back(poly_to_json(p, f.domain().ambient_vars()));
  r["L"] = fj;
  return r;
}

json cmd_gradexp(const Options& o) {
  const NamedPoly p = poly_from_json(read_json(o.f, "f"));
  const auto shells = o.shells.empty() ? kDefaultShells : o.shells;
  const int samples = o.samples > 0 ? o.samples : 200;
  json r = gradexp_to_json(gradexp_report(p.poly, o.seed, o.prec, shells, samples));
  r["vars"] = p.vars;
  return r;
}

// --- rendering --------------------------------------------------------------

void render_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render_text(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::string render(const json& report, const std::string& format) {
  if (format == "text") {
    std::ostringstream s;
    render_text(report, "", s);
    return s.str();
  }
  return report.dump(2) + "\n";
}

unsigned default_precision() {
  if (const char* env = std::getenv("CNULL_PREC")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, std::string("CNULL_PREC is not a number: ") + env);
    }
  }
  return kDefaultPrecision;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.prec = default_precision();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kInput;
  }

  CLI::App app{"Effective Nullstellensatz certificates for c-algebraic maps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CNULL_VERSION);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Seed for all generic choices")->capture_default_str();
    sub->add_option("--prec", o.prec, "Working precision in bits (128, 256, 512, 1024)")->capture_default_str();
    sub->add_option("--out", o.out, "Write the report to this file");
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  };
  auto with_maps = [&](CLI::App* sub, bool need_g) {
    sub->add_option("--variety", o.variety, "Variety JSON")->required();
    sub->add_option("--f", o.f, "Map JSON")->required();
    if (need_g) sub->add_option("--g", o.g, "Function JSON (one component)")->required();
    common(sub);
  };

  std::map<CLI::App*, json (*)(const Options&)> handlers;

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of g relative to f");
  with_maps(charpoly, true);
  charpoly->add_flag("--oracle", o.oracle, "Use the resultant construction instead");
  handlers[charpoly] = cmd_charpoly;

  auto* certify = app.add_subcommand("certify", "Nullstellensatz certificate g^N = sum h_j f_j");
  with_maps(certify, true);
  certify->add_option("--theorem", o.theorem, "Route to use")
      ->check(CLI::IsMember({"auto", "proper", "partial", "general", "strictly_regular", "fallback"}))
      ->capture_default_str();
  certify->add_option("--ell", o.ell, "Number of leading components used (partial route)");
  certify->add_option("--L", o.forms, "Affine forms JSON for the strictly regular route");
  certify->add_option("--components", o.components, "Variety JSON files of the components of f^-1(0)");
  certify->add_option("--multiplicities", o.multiplicities, "Multiplicities overriding the estimates");
  certify->add_option("--cycle-degree", o.cycle_total, "Explicit degree of the cycle of zeroes");
  certify->add_option("--N", o.exponent, "Exponent bound for the fallback search");
  certify->add_option("--degree-cap", o.degree_cap, "Degree cap for the fallback search");
  handlers[certify] = cmd_certify;

  auto* verify = app.add_subcommand("verify", "Exact verification of a certificate");
  with_maps(verify, true);
  verify->add_option("--cert", o.cert, "Certificate JSON")->required();
  handlers[verify] = cmd_verify;

  auto* degree = app.add_subcommand("degree", "Degree of a parametrized variety");
  degree->add_option("--variety", o.variety, "Variety JSON")->required();
  common(degree);
  handlers[degree] = cmd_degree;

  auto* geomdeg = app.add_subcommand("geomdeg", "Geometric degree, graph and image degree of f");
  with_maps(geomdeg, false);
  geomdeg->add_option("--y", o.y, "Target point for a fibre count (rationals)");
  handlers[geomdeg] = cmd_geomdeg;

  auto* ploski = app.add_subcommand("ploski", "Ploski exponent and growth inclusion check");
  with_maps(ploski, true);
  ploski->add_option("--q", o.q, "Exponent to test (default: delta)");
  ploski->add_option("--R", o.radius, "Smallest sample norm")->capture_default_str();
  ploski->add_option("--samples", o.samples, "Number of samples (default 1000)");
  ploski->add_flag("--oracle", o.oracle, "Use the resultant construction");
  handlers[ploski] = cmd_ploski;

  auto* gradexp = app.add_subcommand("gradexp", "Gradient exponent and inequality validation");
  gradexp->add_option("--f", o.f, "Polynomial JSON")->required();
  gradexp->add_option("--shells", o.shells, "Sample norms (default 10 100 1000 10000)");
  gradexp->add_option("--samples", o.samples, "Samples per shell (default 200)");
  common(gradexp);
  handlers[gradexp] = cmd_gradexp;

  auto* cycle = app.add_subcommand("cycle", "Degree of the cycle of zeroes of f");
  with_maps(cycle, false);
  cycle->add_option("--components", o.components, "Variety JSON files of the components of f^-1(0)");
  cycle->add_option("--L", o.forms, "Affine forms JSON");
  cycle->add_option("--multiplicities", o.multiplicities, "Multiplicities overriding the estimates");
  handlers[cycle] = cmd_cycle;

  auto* bounds = app.add_subcommand("check-bounds", "Degree bounds of the characteristic polynomial");
  with_maps(bounds, true);
  handlers[bounds] = cmd_check_bounds;

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  json report = {{"tool", "cnull"}, {"version", CNULL_VERSION}, {"command", command}, {"seed", o.seed}, {"prec", o.prec}};
  int code = kSuccess;
  try {
    check_precision(o.prec);
    report["result"] = handlers.at(chosen)(o);
  } catch (const Error& e) {
    code = exit_code_for(e.kind());
    report["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    err << e.what() << "\n";
  } catch (const std::exception& e) {
    code = kInput;
    report["error"] = {{"kind", "InputError"}, {"message", e.what()}};
    err << e.what() << "\n";
  }

  const std::string text = render(report, o.format);
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "cannot write " << o.out << "\n";
      return kInput;
    }
    file << text;
  }
  return code;
}

}  // namespace cnull::cli
