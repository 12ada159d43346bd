#include <gtest/gtest.h>

#include "cnull/error.hpp"
#include "cnull/json_io.hpp"
#include "cnull/linear_algebra.hpp"
#include "cnull/polynomial.hpp"
#include "cnull/rational.hpp"
#include "support.hpp"

using namespace cnull;
using cnull::test::PolyGen;

namespace {

MPoly x(std::size_t n, std::size_t i) { return MPoly::variable(n, i); }
MPoly c(std::size_t n, long v) { return MPoly::constant(n, Rat(v)); }

MPoly from_roots(const std::vector<long>& roots) {
  MPoly p = c(1, 1);
  for (long r : roots) p *= x(1, 0) - c(1, r);
  return p;
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rat("-3/6"), Rat(-1, 2));
  EXPECT_EQ(format_rat(Rat(4, 2)), "2");
  EXPECT_EQ(format_rat(Rat(-1, 3)), "-1/3");
  EXPECT_THROW(parse_rat("1/0"), Error);
  EXPECT_THROW(parse_rat("abc"), Error);
  EXPECT_EQ(height(Rat(-7, 3)), 7);
}

TEST(Polynomial, ArithmeticExamples) {
  const MPoly a = x(2, 0) + x(2, 1);
  const MPoly b = x(2, 0) - x(2, 1);
  EXPECT_EQ(a * b, x(2, 0).pow(2) - x(2, 1).pow(2));
  EXPECT_EQ(arith(a, b, ArithKind::Add), c(2, 2) * x(2, 0));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a - a).total_degree(), std::nullopt);
  EXPECT_EQ(a.pow(2).total_degree(), 2);
  EXPECT_THROW(x(2, 0) + x(3, 0), Error);
}

TEST(Polynomial, LeadingTermIsGradedLex) {
  const MPoly p = x(2, 1).pow(3) + x(2, 0) * x(2, 1).pow(2) + x(2, 0);
  EXPECT_EQ(p.leading_term().first, (Exponent{1, 2}));
  EXPECT_EQ(p.degree_in(1), 3);
}

TEST(Polynomial, EvaluateAndCompose) {
  const MPoly p = x(2, 0).pow(2) * x(2, 1) - c(2, 3);
  const Rat pt[] = {Rat(2), Rat(1, 2)};
  EXPECT_EQ(p.evaluate(pt), Rat(-1));
  // Cusp parametrization pulls y^2 - x^3 back to zero.
  const MPoly cusp = x(2, 1).pow(2) - x(2, 0).pow(3);
  const MPoly subs[] = {x(1, 0).pow(2), x(1, 0).pow(3)};
  EXPECT_TRUE(compose(cusp, subs).is_zero());
}

TEST(Polynomial, ExactDivision) {
  const MPoly q = x(2, 0) - x(2, 1);
  const MPoly r = x(2, 0).pow(2) + c(2, 1);
  EXPECT_EQ(exact_divide(q * r, q), r);
  EXPECT_FALSE(try_divide(r, q).has_value());
  EXPECT_THROW(exact_divide(r, q), Error);
}

TEST(Polynomial, ResultantHandExamples) {
  // Res_t(t^2 - y, s - t) = s^2 - y in the ring (t, y, s).
  const MPoly p = x(3, 0).pow(2) - x(3, 1);
  const MPoly q = x(3, 2) - x(3, 0);
  EXPECT_EQ(resultant(p, q, 0), x(3, 2).pow(2) - x(3, 1));
  // Res_t(t^2 - y, s - t^3) = s^2 - y^3.
  const MPoly q3 = x(3, 2) - x(3, 0).pow(3);
  EXPECT_EQ(resultant(p, q3, 0), x(3, 2).pow(2) - x(3, 1).pow(3));
}

TEST(Polynomial, ResultantMatchesRootProduct) {
  // For monic p = prod (t - a_i): Res(p, q) = prod q(a_i).
  PolyGen gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long> roots;
    const int n = gen.uniform(1, 4);
    for (int i = 0; i < n; ++i) roots.push_back(gen.uniform(-5, 5));
    const MPoly p = from_roots(roots);
    MPoly q = gen.poly(1, 4, 4);
    if (q.degree_in(0) < 1) q += x(1, 0);
    Rat expected(1);
    for (long r : roots) {
      const Rat pt[] = {Rat(r)};
      expected *= q.evaluate(pt);
    }
    const MPoly res = resultant(p, q, 0);
    ASSERT_TRUE(res.is_constant());
    EXPECT_EQ(res.constant_term(), expected) << "trial " << trial;
  }
}

TEST(Polynomial, GcdAndSquarefree) {
  const MPoly p = from_roots({1, 1, 2, 3, 3, 3});
  const MPoly q = from_roots({1, 3, 4});
  EXPECT_EQ(gcd_univariate(p, q), from_roots({1, 3}));
  const auto parts = squarefree_decomposition(p);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], from_roots({2}));
  EXPECT_EQ(parts[1], from_roots({1}));
  EXPECT_EQ(parts[2], from_roots({3}));
  EXPECT_EQ(remainder_univariate(x(1, 0).pow(3), x(1, 0).pow(2) - c(1, 1)), x(1, 0));
}

TEST(Polynomial, InterpolationRecoversQuadratic) {
  // a(c) = -c on the grid {0, 1, 2} with bound 2.
  std::vector<Sample> samples;
  for (long v : {0, 1, 2}) samples.push_back({{Rat(v)}, Rat(-v)});
  const int bounds[] = {2};
  EXPECT_EQ(interpolate(samples, bounds), -x(1, 0));
  samples.push_back({{Rat(3)}, Rat(7)});
  EXPECT_THROW(interpolate(samples, bounds), Error);
}

TEST(Polynomial, InterpolationProperty) {
  PolyGen gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    const MPoly p = gen.poly(2, 4, 6);
    const int bounds[] = {4, 4};
    std::vector<Sample> samples;
    for (long a = -2; a <= 3; ++a) {
      for (long b = -3; b <= 2; ++b) {
        std::vector<Rat> pt{Rat(a), Rat(b)};
        samples.push_back({pt, p.evaluate(pt)});
      }
    }
    EXPECT_EQ(interpolate(samples, bounds), p) << "trial " << trial;
  }
}

TEST(Polynomial, RingAxiomsProperty) {
  PolyGen gen(7);
  for (int trial = 0; trial < 100; ++trial) {
    const MPoly a = gen.poly(3, 3, 5);
    const MPoly b = gen.poly(3, 3, 5);
    const MPoly d = gen.poly(3, 3, 5);
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a - b) + b, a);
    // Product rule.
    EXPECT_EQ((a * b).derivative(1), a.derivative(1) * b + a * b.derivative(1));
    if (!b.is_zero()) {
      const auto q = try_divide(a * b, b);
      ASSERT_TRUE(q.has_value());
      EXPECT_EQ(*q, a);
    }
  }
}

TEST(Polynomial, JsonRoundTrip) {
  PolyGen gen(3);
  const std::vector<std::string> vars{"u", "v"};
  for (int trial = 0; trial < 20; ++trial) {
    const MPoly p = gen.poly(2, 5, 6);
    EXPECT_EQ(poly_from_json(poly_to_json(p, vars), vars), p);
  }
  // Remapping by name.
  const std::vector<std::string> ctx{"v", "w", "u"};
  const MPoly p = x(2, 0) * x(2, 1).pow(2);
  EXPECT_EQ(poly_from_json(poly_to_json(p, vars), ctx), x(3, 2) * x(3, 0).pow(2));
  const std::vector<std::string> bad{"w"};
  EXPECT_THROW(poly_from_json(poly_to_json(p, vars), bad), Error);
}

TEST(LinearAlgebra, SolvesAndDetectsInconsistency) {
  RatMatrix a{{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
  const auto sol = solve_linear_system(a, {Rat(3), Rat(1)});
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ((*sol)[0], Rat(2));
  EXPECT_EQ((*sol)[1], Rat(1));
  RatMatrix singular{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  EXPECT_FALSE(solve_linear_system(singular, {Rat(1), Rat(3)}).has_value());
  EXPECT_TRUE(solve_linear_system(singular, {Rat(1), Rat(2)}).has_value());
}
