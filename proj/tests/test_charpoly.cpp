#include <gtest/gtest.h>

#include "cnull/charpoly.hpp"
#include "cnull/error.hpp"
#include "cnull/proper_map.hpp"
#include "support.hpp"

using namespace cnull;
using namespace cnull::test;

namespace {

MPoly y(long power) { return MPoly::monomial(Exponent{static_cast<std::uint32_t>(power)}, Rat(1)); }

CharPoly manual(std::vector<MPoly> coeffs) {
  CharPoly p;
  p.d = coeffs.size();
  p.var_count = coeffs.empty() ? 1 : coeffs.front().var_count();
  p.coeffs = std::move(coeffs);
  return p;
}

}  // namespace

TEST(CharPoly, CuspExample) {
  const auto c = make_case("cusp", "cusp.json", "cusp_f.json", "cusp_g.json");
  const CharPoly p = build_charpoly(c.f, c.g, 0);
  EXPECT_TRUE(p.verified);
  EXPECT_EQ(p.d, 2u);
  ASSERT_EQ(p.coeffs.size(), 2u);
  EXPECT_TRUE(p.coeffs[0].is_zero());
  EXPECT_EQ(p.coeffs[1], Rat(-1) * y(1));
  EXPECT_EQ(p.bounds, (std::vector<int>{0, 1}));
}

TEST(CharPoly, DegreeOneAndZeroFunction) {
  const auto line = variety("line.json");
  const CharPoly p = build_charpoly(map("line_x.json", line), map("line_x2.json", line), 0);
  ASSERT_EQ(p.d, 1u);
  EXPECT_EQ(p.coeffs[0], Rat(-1) * y(2));

  const auto cusp = variety("cusp.json");
  auto zero = read_fixture("cusp_f.json");
  zero["components"][0]["num"]["terms"] = nlohmann::json::array();
  const CharPoly z = build_charpoly(map("cusp_f.json", cusp), load_map(zero, cusp), 0);
  EXPECT_EQ(z.d, 2u);
  for (const auto& a : z.coeffs) EXPECT_TRUE(a.is_zero());
}

TEST(CharPoly, ResultantOracleHandExamples) {
  const auto c = make_case("cusp", "cusp.json", "cusp_f.json", "cusp_g.json");
  const CharPoly o = charpoly_resultant_oracle(c.f, c.g);
  EXPECT_EQ(o.as_polynomial(), MPoly::variable(2, 1).pow(2) - MPoly::variable(2, 0));
  const auto line = variety("line.json");
  const CharPoly o2 = charpoly_resultant_oracle(map("line_x2.json", line), map("line_x3.json", line));
  EXPECT_EQ(o2.as_polynomial(), MPoly::variable(2, 1).pow(2) - MPoly::variable(2, 0).pow(3));
  EXPECT_THROW(charpoly_resultant_oracle(map("line_one.json", line), map("line_x.json", line)), Error);
}

TEST(CharPoly, OracleEquivalenceOnCurveFixtures) {
  for (const auto& c : curve_cases()) {
    const CharPoly built = build_charpoly(c.f, c.g, 0);
    const CharPoly oracle = charpoly_resultant_oracle(c.f, c.g);
    EXPECT_EQ(built.d, oracle.d) << c.label;
    EXPECT_EQ(built.coeffs, oracle.coeffs) << c.label;
  }
}

TEST(CharPoly, ExactAnnihilation) {
  for (const auto& c : curve_cases()) {
    const CharPoly p = build_charpoly(c.f, c.g, 1);
    std::vector<MPoly> subs = c.f.pullbacks();
    subs.push_back(c.g.pullbacks()[0]);
    EXPECT_TRUE(compose(p.as_polynomial(), subs).is_zero()) << c.label;
  }
}

TEST(CharPoly, BoundCompliance) {
  for (const auto& c : curve_cases()) {
    const CharPoly p = build_charpoly(c.f, c.g, 0);
    for (const auto& row : check_bounds(p)) EXPECT_TRUE(row.ok) << c.label << " j=" << row.j;
  }
}

TEST(CharPoly, GridIndependence) {
  for (const auto& c : curve_cases()) {
    const CharPoly ref = build_charpoly(c.f, c.g, 0);
    const std::size_t nodes = static_cast<std::size_t>(*std::max_element(ref.bounds.begin(), ref.bounds.end())) + 2;
    CharPolyOptions low, high;
    low.grid_nodes.resize(1);
    high.grid_nodes.resize(1);
    for (std::size_t i = 0; i < nodes; ++i) {
      low.grid_nodes[0].emplace_back(static_cast<long>(i) + 3);
      high.grid_nodes[0].emplace_back(-static_cast<long>(i) - 2, 3);
    }
    const CharPoly a = build_charpoly(c.f, c.g, 0, low);
    const CharPoly b = build_charpoly(c.f, c.g, 0, high);
    EXPECT_EQ(a.coeffs, b.coeffs) << c.label;
    EXPECT_EQ(a.coeffs, ref.coeffs) << c.label;
  }
}

TEST(CharPoly, CriticalGridIsRejected) {
  const auto c = make_case("cusp", "cusp.json", "cusp_f.json", "cusp_g.json");
  CharPolyOptions opts;
  opts.grid_nodes = {{Rat(0), Rat(1), Rat(2)}};
  try {
    build_charpoly(c.f, c.g, 0, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CriticalSampleBudgetExhausted);
  }
}

TEST(CharPoly, TwoParameterDomain) {
  const auto plane = variety("plane.json");
  const CAMap f = map("plane_f_id.json", plane);
  const CharPoly p = build_charpoly(f, map("plane_g_x1x2.json", plane), 0);
  ASSERT_EQ(p.d, 1u);
  EXPECT_EQ(p.coeffs[0], Rat(-1) * MPoly::variable(2, 0) * MPoly::variable(2, 1));
}

TEST(Ploski, DeltaExamples) {
  EXPECT_EQ(ploski_delta(manual({MPoly(1), Rat(-1) * y(1)})), Rat(1, 2));
  EXPECT_EQ(ploski_delta(manual({MPoly(1), MPoly(1), MPoly(1)})), Rat(0));
  EXPECT_EQ(ploski_delta(manual({y(1), y(3)})), Rat(3, 2));
}

TEST(Ploski, GrowthInclusionAtAndBelowDelta) {
  const CharPoly p = manual({MPoly(1), Rat(-1) * y(1)});
  const auto at = growth_inclusion_check(p, Rat(1, 2), 100.0, 1000, 0);
  EXPECT_TRUE(at.holds);
  EXPECT_NEAR(at.c, 1.0, 1e-9);
  const auto below = growth_inclusion_check(p, Rat(1, 4), 100.0, 1000, 0);
  EXPECT_FALSE(below.holds);
  EXPECT_GT(std::abs(below.witness_x.at(0)), 1e4);
  const auto zero = growth_inclusion_check(manual({MPoly(1), MPoly(1)}), Rat(1), 100.0, 50, 0);
  EXPECT_TRUE(zero.holds);
  EXPECT_GT(zero.c, 0.0);
}

TEST(Ploski, MinimalityOnFixtures) {
  for (const auto& c : curve_cases()) {
    const CharPoly p = build_charpoly(c.f, c.g, 0);
    const Rat delta = ploski_delta(p);
    if (delta == 0) continue;
    EXPECT_TRUE(growth_inclusion_check(p, delta, 100.0, 400, 0).holds) << c.label;
    EXPECT_FALSE(growth_inclusion_check(p, delta * Rat(7, 8), 100.0, 400, 0).holds) << c.label;
  }
}

TEST(CheckBounds, CuspAndParabolaRows) {
  const auto c = make_case("cusp", "cusp.json", "cusp_f.json", "cusp_g.json");
  const auto rows = check_bounds(build_charpoly(c.f, c.g, 0));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].degree.has_value());
  EXPECT_EQ(rows[0].bound, 0);
  EXPECT_EQ(rows[1].degree, 1);
  EXPECT_EQ(rows[1].bound, 1);
  const auto pa = make_case("parabola", "parabola.json", "parabola_f.json", "parabola_g.json");
  const auto prow = check_bounds(build_charpoly(pa.f, pa.g, 0));
  ASSERT_EQ(prow.size(), 1u);
  EXPECT_EQ(prow[0].degree, 2);
  EXPECT_EQ(prow[0].bound, 2);
  EXPECT_TRUE(prow[0].ok);
}
