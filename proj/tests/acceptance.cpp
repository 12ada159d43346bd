// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "cnull/charpoly.hpp"
#include "cnull/error.hpp"
#include "cnull/gradexp.hpp"
#include "cnull/nullcert.hpp"
#include "cnull/proper_map.hpp"
#include "support.hpp"

using namespace cnull;
using namespace cnull::test;

namespace {

// Wall-clock limits in seconds.
constexpr double kCuspLimit = 1.0;
constexpr double kOracleLimit = 10.0;
constexpr double kPloskiLimit = 5.0;
constexpr double kGeneralLimit = 30.0;

// Growth check: 10^3 samples starting at |y| = 10^2 (four decades, up to 10^6).
constexpr double kPloskiRadius = 100.0;
constexpr int kPloskiSamples = 1000;

// Gradient shells: 200 samples per norm, top/previous ratio at most 2.
constexpr int kShellSamples = 200;

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.ok = false;
    v.detail << " [exception: " << e.what() << "]";
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && elapsed >= limit_seconds) {
    v.ok = false;
    v.detail << " [runtime " << elapsed << " s exceeds " << limit_seconds << " s]";
  }
  if (!v.ok) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.3f s", elapsed);
  std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << timing << ")"
            << v.detail.str() << std::endl;
}

std::vector<Case> proper_cases() {
  auto cases = curve_cases();
  cases.push_back(make_case("plane identity", "plane.json", "plane_f_id.json", "plane_g_x1x2.json"));
  return cases;
}

}  // namespace

int main() {
  criterion(1, "cusp certificate g^2 = 1*f", kCuspLimit, [](Verdict& v) {
    const auto c = make_case("cusp", "cusp.json", "cusp_f.json", "cusp_g.json");
    const Certificate cert = certify_proper(c.f, c.g, 0);
    v.require(cert.exponent == 2, "N = 2");
    v.require(cert.h.size() == 1, "one h");
    if (cert.h.size() != 1) return;
    const std::vector<MPoly> subs{c.f.pullbacks()[0], c.g.pullbacks()[0]};
    const MPoly h_pull = compose(cert.h[0], subs);
    v.require(h_pull == MPoly::constant(1, Rat(1)), "h pulls back to 1");
    const MPoly residual = c.g.pullbacks()[0].pow(2) - c.f.pullbacks()[0] * h_pull;
    v.require(residual.is_zero(), "exact residual");
    v.require(verify_certificate(c.f, c.g, cert), "verify_certificate");
  });

  criterion(2, "characteristic polynomial equals resultant oracle", kOracleLimit, [](Verdict& v) {
    const auto cases = curve_cases();
    v.require(cases.size() >= 5, "at least five fixtures");
    for (const auto& c : cases) {
      const CharPoly built = build_charpoly(c.f, c.g, 0);
      const CharPoly oracle = charpoly_resultant_oracle(c.f, c.g);
      v.require(built.d == oracle.d && built.coeffs == oracle.coeffs, c.label);
    }
    const auto cusp = make_case("cusp", "cusp.json", "cusp_f.json", "cusp_g.json");
    v.require(build_charpoly(cusp.f, cusp.g, 0).as_polynomial() ==
                  MPoly::variable(2, 1).pow(2) - MPoly::variable(2, 0),
              "cusp P = t^2 - y1");
  });

  criterion(3, "nodal projection: d(f) = 1 with two points over 0", 0, [](Verdict& v) {
    const auto ex = variety("nodal.json");
    const CAMap f = map("nodal_f.json", ex);
    v.require(geometric_degree(f, 0) == 1, "d(f) = 1");
    const std::vector<Rat> origin{Rat(0), Rat(0)};
    v.require(fiber_count_at(f, origin) == 2, "#f^-1(0) = 2");
  });

  criterion(4, "coefficient degree bounds", 0, [](Verdict& v) {
    for (const auto& c : proper_cases()) {
      for (const auto& row : check_bounds(build_charpoly(c.f, c.g, 0))) {
        v.require(row.ok, c.label + " j=" + std::to_string(row.j));
      }
    }
    const auto cusp = make_case("cusp", "cusp.json", "cusp_f.json", "cusp_g.json");
    const auto rows = check_bounds(build_charpoly(cusp.f, cusp.g, 0));
    v.require(rows.size() == 2 && rows[0].bound == 0 && rows[1].bound == 1, "cusp bounds (0, 1)");
    v.require(rows.size() == 2 && rows[1].degree == 1, "equality at j = 2");
  });

  criterion(5, "Ploski exponent minimality for t^2 - y1", kPloskiLimit, [](Verdict& v) {
    CharPoly p;
    p.d = 2;
    p.var_count = 1;
    p.coeffs = {MPoly(1), Rat(-1) * MPoly::variable(1, 0)};
    v.require(ploski_delta(p) == Rat(1, 2), "delta = 1/2");
    v.require(growth_inclusion_check(p, Rat(1, 2), kPloskiRadius, kPloskiSamples, 0).holds, "holds at 1/2");
    const auto below = growth_inclusion_check(p, Rat(3, 8), kPloskiRadius, kPloskiSamples, 0);
    v.require(!below.holds && !below.witness_x.empty(), "witness at 3/8");
  });

  criterion(6, "gradient exponent for x1^2 + x2^2", 0, [](Verdict& v) {
    const MPoly f = MPoly::variable(2, 0).pow(2) + MPoly::variable(2, 1).pow(2);
    const auto r = gradexp_report(f, 0, kDefaultPrecision, kDefaultShells, kShellSamples);
    v.require(r.d == 2 && r.profile.mu == 1 && r.profile.D == 1, "(d, mu, D) = (2, 1, 1)");
    v.require(r.theta == Rat(1, 2), "theta = 1/2");
    v.require(r.validation.validated, "passes at 1/2");
    v.require(!validate_inequality(f, Rat(1), kDefaultShells, kShellSamples, 0).validated, "fails at 1");
  });

  criterion(7, "Stoll formula on the cusp", 0, [](Verdict& v) {
    const auto cusp = variety("cusp.json");
    const CAMap f = map("cusp_f.json", cusp);
    for (long y0 : {0L, 1L}) {
      const std::vector<Rat> y{Rat(y0)};
      const auto s = stoll_check(f, y);
      v.require(s.ok && s.lhs == 2 && s.rhs == 2, "y0 = " + std::to_string(y0));
    }
  });

  criterion(8, "strictly regular certificate and cycle degree", 0, [](Verdict& v) {
    const auto plane = variety("plane.json");
    const CAMap f = map("plane_f_x1sq.json", plane);
    const CAMap g = map("plane_g_x1.json", plane);
    const std::vector<MPoly> forms{MPoly::variable(2, 1)};
    const CycleData cy = cycle_degree(f, {variety("plane_axis_x1zero.json")}, forms, 0);
    v.require(cy.total_degree == 2, "deg Z_f = 2");
    const Certificate cert = certify_strictly_regular(f, g, forms, cy, 0);
    v.require(cert.exponent == 2 && cert.verified, "verified g^2 certificate");
    v.require(cert.h.size() == 1 && cert.h[0] == MPoly::constant(3, Rat(1)), "h = 1");
    for (const auto& c : proper_cases()) {
      v.require(point_cycle_degree(c.f, 0).total_degree == geometric_degree(c.f, 0), c.label + " deg Z_f = d(f)");
    }
  });

  criterion(9, "general case on the nodal projection", kGeneralLimit, [](Verdict& v) {
    const auto c = make_case("nodal", "nodal.json", "nodal_f.json", "nodal_g.json");
    const std::size_t bound = geometric_degree(c.f, 0) * image_degree(c.f, 0);
    v.require(bound == 3, "d(f) * deg f(A) = 3");
    const Certificate cert = certify_general(c.f, c.g, 0);
    v.require(cert.verified && verify_certificate(c.f, c.g, cert), "verified");
    v.require(cert.exponent <= 3, "N <= 3");
    if (cert.theorem == Theorem::Fallback) {
      v.require(cert.diagnostics.find("VanishingHypothesisFailed") != std::string::npos, "diagnostics recorded");
    }
    std::cout << "  route: " << to_string(cert.theorem) << ", N = " << cert.exponent << std::endl;
  });

  criterion(10, "property suites", 0, [](Verdict& v) {
    for (const auto& c : curve_cases()) {
      const CharPoly ref = build_charpoly(c.f, c.g, 0);
      const int top = ref.bounds.empty() ? 0 : *std::max_element(ref.bounds.begin(), ref.bounds.end());
      CharPolyOptions a, b;
      a.grid_nodes.resize(1);
      b.grid_nodes.resize(1);
      for (int i = 0; i < top + 2; ++i) {
        a.grid_nodes[0].emplace_back(i + 3);
        b.grid_nodes[0].emplace_back(-i - 2, 3);
      }
      v.require(build_charpoly(c.f, c.g, 0, a).coeffs == build_charpoly(c.f, c.g, 0, b).coeffs,
                "grid independence " + c.label);
    }

    for (const auto& c : proper_cases()) {
      v.require(geometric_degree(c.f, 0) <= graph_degree(c.f, 0), "d(f) <= deg graph " + c.label);
    }
    const auto ex = make_case("nodal", "nodal.json", "nodal_f.json", "nodal_g.json");
    v.require(geometric_degree(ex.f, 0) <= graph_degree(ex.f, 0), "d(f) <= deg graph nodal");

    std::vector<std::pair<Case, Certificate>> certs;
    for (const auto& c : curve_cases()) certs.emplace_back(c, certify_proper(c.f, c.g, 0));
    certs.emplace_back(ex, certify_general(ex.f, ex.g, 0));
    for (const auto& [c, cert] : certs) {
      const auto vars = c.domain->ambient_vars();
      const Certificate again = certificate_from_json(certificate_to_json(cert, c.f.size(), vars), c.f.size(), vars);
      v.require(cert.verified && verify_certificate(c.f, c.g, again) && verify_certificate(c.f, c.g, again),
                "re-verification " + c.label);
    }

    PolyGen gen(10);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t k = static_cast<std::size_t>(gen.uniform(1, 3));
      const std::size_t ell = static_cast<std::size_t>(gen.uniform(1, static_cast<int>(k)));
      MPoly a(k);
      for (std::size_t i = 0; i < ell; ++i) a += MPoly::variable(k, i) * gen.poly(k, 5, 4);
      const auto parts = split_coeff(a, ell);
      MPoly back(k);
      for (std::size_t i = 0; i < ell; ++i) back += MPoly::variable(k, i) * parts[i];
      v.require(back == a, "split_coeff trial " + std::to_string(trial));
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
