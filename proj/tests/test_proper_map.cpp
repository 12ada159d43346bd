#include <gtest/gtest.h>

#include "cnull/error.hpp"
#include "cnull/proper_map.hpp"
#include "support.hpp"

using namespace cnull;
using namespace cnull::test;

namespace {

// Exact count of distinct roots of F(t) − y: degree of the square-free part.
// Equals the fibre count whenever φ is injective (true on every curve fixture).
std::size_t distinct_root_count(const MPoly& pull, const Rat& y) {
  const MPoly p = pull - MPoly::constant(1, y);
  const MPoly g = gcd_univariate(p, p.derivative(0));
  return static_cast<std::size_t>(p.degree_in(0) - g.degree_in(0));
}

std::vector<Rat> pt(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(GeometricDegree, Examples) {
  const auto cusp = variety("cusp.json");
  EXPECT_EQ(geometric_degree(map("cusp_f.json", cusp), 0), 2u);
  const auto ex = variety("nodal.json");
  EXPECT_EQ(geometric_degree(map("nodal_f.json", ex), 0), 1u);
  const auto line = variety("line.json");
  EXPECT_EQ(geometric_degree(map("line_x.json", line), 0), 1u);
  EXPECT_EQ(geometric_degree(map("line_x3.json", line), 0), 3u);
  const auto plane = variety("plane.json");
  EXPECT_EQ(geometric_degree(map("plane_f_id.json", plane), 0), 1u);
}

TEST(GeometricDegree, MatchesSquarefreeOracle) {
  for (const auto& c : curve_cases()) {
    const std::size_t d = geometric_degree(c.f, 3);
    EXPECT_EQ(d, distinct_root_count(c.f.pullbacks()[0], Rat(17, 5))) << c.label;
  }
}

TEST(GeometricDegree, SeedInvariance) {
  const auto cusp = variety("cusp.json");
  const auto ex = variety("nodal.json");
  const CAMap f = map("cusp_f.json", cusp);
  const CAMap e = map("nodal_f.json", ex);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(geometric_degree(f, seed), 2u);
    EXPECT_EQ(geometric_degree(e, seed), 1u);
  }
}

TEST(GeometricDegree, ConstantMapIsNotProper) {
  const auto line = variety("line.json");
  try {
    geometric_degree(map("line_one.json", line), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotProper);
  }
}

TEST(FiberCount, Examples) {
  const auto ex = variety("nodal.json");
  EXPECT_EQ(fiber_count_at(map("nodal_f.json", ex), pt({0, 0})), 2u);
  const auto cusp = variety("cusp.json");
  const CAMap f = map("cusp_f.json", cusp);
  EXPECT_EQ(fiber_count_at(f, pt({0})), 1u);
  EXPECT_EQ(fiber_count_at(f, pt({1})), 2u);
  // A point outside the image has an empty fibre.
  EXPECT_EQ(fiber_count_at(map("nodal_f.json", ex), pt({0, 1})), 0u);
}

TEST(FiberCount, NeverExceedsDegreeAndDropsAtCriticalValues) {
  for (const auto& c : curve_cases()) {
    const std::size_t d = geometric_degree(c.f, 0);
    for (long y = -4; y <= 4; ++y) {
      const std::size_t count = fiber_count_at(c.f, pt({y}));
      EXPECT_LE(count, d) << c.label << " at " << y;
      EXPECT_EQ(count, distinct_root_count(c.f.pullbacks()[0], Rat(y))) << c.label << " at " << y;
    }
  }
}

TEST(LocalMultiplicity, Examples) {
  const auto cusp = variety("cusp.json");
  const CAMap f = map("cusp_f.json", cusp);
  EXPECT_EQ(local_multiplicity(f, pt({0, 0}), 0), 2);
  EXPECT_EQ(local_multiplicity(f, pt({1, 1}), 0), 1);
  const auto parabola = variety("parabola.json");
  const CAMap p = map("parabola_f.json", parabola);
  EXPECT_EQ(local_multiplicity(p, pt({0, 0}), 0), 1);
  EXPECT_EQ(local_multiplicity(p, pt({3, 9}), 0), 1);
  EXPECT_THROW(local_multiplicity(f, pt({1, 2}), 0), Error);
}

TEST(LocalMultiplicity, IndeterminateValueUsesContinuousExtension) {
  const auto cusp = variety("cusp.json");
  const CAMap g = map("cusp_g.json", cusp);
  EXPECT_EQ(value_at(g, pt({0, 0})), pt({0}));
  EXPECT_EQ(value_at(g, pt({4, 8})), pt({2}));
}

TEST(Stoll, HoldsOnProperFixtures) {
  const auto cusp = variety("cusp.json");
  const CAMap f = map("cusp_f.json", cusp);
  for (long y0 : {0, 1, -3}) {
    const auto s = stoll_check(f, pt({y0}));
    EXPECT_EQ(s.lhs, 2u);
    EXPECT_EQ(s.rhs, 2u);
    EXPECT_TRUE(s.ok);
  }
  const auto parabola = variety("parabola.json");
  const auto s = stoll_check(map("parabola_f.json", parabola), pt({0}));
  EXPECT_EQ(s.lhs, 1u);
  EXPECT_TRUE(s.ok);
  for (const auto& c : curve_cases()) {
    for (long y0 : {0, 1, 2}) EXPECT_TRUE(stoll_check(c.f, pt({y0})).ok) << c.label << " at " << y0;
  }
  const auto plane = variety("plane.json");
  EXPECT_TRUE(stoll_check(map("plane_f_id.json", plane), pt({0, 0})).ok);
}

TEST(ImageDegree, Examples) {
  const auto ex = variety("nodal.json");
  EXPECT_EQ(image_degree(map("nodal_f.json", ex), 0), 3u);
  const auto cusp = variety("cusp.json");
  EXPECT_EQ(image_degree(map("cusp_f.json", cusp), 0), 1u);
  EXPECT_EQ(image_degree(map("cusp_id.json", cusp), 0), 3u);
}

TEST(GraphDegree, ExamplesAndBoundsGeometricDegree) {
  const auto cusp = variety("cusp.json");
  EXPECT_EQ(graph_degree(map("cusp_f.json", cusp), 0), 3u);
  const auto line = variety("line.json");
  EXPECT_EQ(graph_degree(map("line_x2.json", line), 0), 2u);
  EXPECT_EQ(graph_degree(map("line_x.json", line), 0), 1u);
  for (const auto& c : curve_cases()) {
    EXPECT_LE(geometric_degree(c.f, 0), graph_degree(c.f, 0)) << c.label;
  }
  const auto ex = variety("nodal.json");
  const CAMap e = map("nodal_f.json", ex);
  EXPECT_LE(geometric_degree(e, 0), graph_degree(e, 0));
}

TEST(Profile, CollectsInvariants) {
  const auto cusp = variety("cusp.json");
  const auto prof = profile(map("cusp_f.json", cusp), 0);
  EXPECT_EQ(prof.d_f, 2u);
  EXPECT_EQ(prof.graph_degree, 3u);
  ASSERT_TRUE(prof.image_degree.has_value());
  EXPECT_EQ(*prof.image_degree, 1u);
  EXPECT_TRUE(prof.witness.proper);
}

TEST(Properness, TopFormsOnThePlane) {
  const auto plane = variety("plane.json");
  EXPECT_TRUE(properness_witness(map("plane_f_id.json", plane)).proper);
  // (x1, x1 x2) is not proper: the fibre over (0, 0) is the line x1 = 0.
  auto j = read_fixture("plane_f_id.json");
  j["components"][1]["num"]["terms"][0]["e"] = {1, 1};
  EXPECT_FALSE(properness_witness(load_map(j, plane)).proper);
}
