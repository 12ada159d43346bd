#include <gtest/gtest.h>

#include "cnull/error.hpp"
#include "cnull/gradexp.hpp"
#include "cnull/json_io.hpp"
#include "support.hpp"

using namespace cnull;

namespace {

MPoly x(std::size_t n, std::size_t i) { return MPoly::variable(n, i); }
MPoly sum_squares() { return x(2, 0).pow(2) + x(2, 1).pow(2); }
MPoly square() { return x(1, 0).pow(2); }

}  // namespace

TEST(Gradient, Examples) {
  EXPECT_EQ(gradient(sum_squares()), (std::vector<MPoly>{Rat(2) * x(2, 0), Rat(2) * x(2, 1)}));
  EXPECT_EQ(gradient(x(2, 0) * x(2, 1)), (std::vector<MPoly>{x(2, 1), x(2, 0)}));
  for (const auto& g : gradient(MPoly::constant(3, Rat(5)))) EXPECT_TRUE(g.is_zero());
}

TEST(GradProfile, Examples) {
  const auto a = grad_profile(sum_squares(), 0);
  EXPECT_EQ(a.mu, 1u);
  EXPECT_EQ(a.D, 1u);
  const auto b = grad_profile(square(), 0);
  EXPECT_EQ(b.mu, 1u);
  EXPECT_EQ(b.D, 1u);
  try {
    grad_profile(x(2, 0), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotProper);
  }
}

TEST(GradProfile, NonlinearGradient) {
  // f = x^4: ∇f = 4x^3 has 3 preimages generically and a graph of degree 3.
  const auto p = grad_profile(x(1, 0).pow(4), 0);
  EXPECT_EQ(p.mu, 3u);
  EXPECT_EQ(p.D, 3u);
  // f = x1^3 + x2^3: ∇f = (3x1^2, 3x2^2), μ = 4.
  const auto q = grad_profile(x(2, 0).pow(3) + x(2, 1).pow(3), 0);
  EXPECT_EQ(q.mu, 4u);
  EXPECT_GE(q.D, q.mu);
}

TEST(GradProfile, SeedStable) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto a = grad_profile(sum_squares(), seed);
    const auto b = grad_profile(square(), seed);
    EXPECT_EQ(a.mu, 1u);
    EXPECT_EQ(a.D, 1u);
    EXPECT_EQ(b.mu, 1u);
    EXPECT_EQ(b.D, 1u);
  }
}

TEST(Theta, FormulaAndRange) {
  EXPECT_EQ(theta(2, 1, 1), Rat(1, 2));
  EXPECT_EQ(theta(3, 3, 1), Rat(1, 9));
  for (long d = 1; d <= 5; ++d) {
    for (long mu = 1; mu <= 4; ++mu) {
      EXPECT_EQ(theta(d, mu, mu), Rat(1, d));
      for (long D = mu; D <= mu + 4; ++D) {
        const Rat t = theta(d, D, mu);
        EXPECT_GT(t, 0);
        EXPECT_LE(t, Rat(1, d));
      }
    }
  }
  EXPECT_THROW(theta(2, 1, 2), Error);
  EXPECT_THROW(theta(0, 1, 1), Error);
}

TEST(ValidateInequality, SquareAtThetaAndTwiceTheta) {
  const auto ok = validate_inequality(square(), Rat(1, 2), kDefaultShells, 200, 0);
  EXPECT_TRUE(ok.validated);
  for (const auto& s : ok.shells) EXPECT_NEAR(s.max_ratio, 0.5, 1e-12);
  const auto bad = validate_inequality(square(), Rat(1), kDefaultShells, 200, 0);
  EXPECT_FALSE(bad.validated);
}

TEST(ValidateInequality, SumOfSquares) {
  const auto ok = validate_inequality(sum_squares(), Rat(1, 2), kDefaultShells, 200, 0);
  EXPECT_TRUE(ok.validated);
  EXPECT_NEAR(ok.c, 0.5, 1e-9);
  EXPECT_FALSE(validate_inequality(sum_squares(), Rat(1), kDefaultShells, 200, 0).validated);
}

TEST(ValidateInequality, VanishingGradientExhaustsBudget) {
  EXPECT_THROW(validate_inequality(MPoly::constant(1, Rat(1)), Rat(1, 2), kDefaultShells, 10, 0), Error);
}

TEST(GradExpReport, InvariantsHold) {
  for (const auto& f : {sum_squares(), square()}) {
    const auto r = gradexp_report(f, 0);
    EXPECT_GE(r.profile.D, r.profile.mu);
    EXPECT_EQ(r.theta, theta(r.d, static_cast<long>(r.profile.D), static_cast<long>(r.profile.mu)));
    EXPECT_TRUE(r.validation.validated);
    const auto j = gradexp_to_json(r);
    EXPECT_EQ(j.at("theta"), "1/2");
  }
}
