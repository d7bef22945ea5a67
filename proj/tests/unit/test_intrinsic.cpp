#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "liedarboux/errors.hpp"
#include "liedarboux/intrinsic.hpp"

using namespace ld;

TEST(Profile, HelixSpecConstants) {
  const IntrinsicProfile helix(HelixSpec{3, 4});
  const KappaTau kt = eval_profile(helix, 12.5);
  EXPECT_NEAR(kt.kappa, 0.12, 1e-15);
  EXPECT_NEAR(kt.tau, 0.16, 1e-15);

  const HelixSpec spec{3, 4};
  EXPECT_EQ(spec.c(), 5.0);
  EXPECT_NEAR(spec.xi() * spec.tau(), spec.kappa(), 1e-14 * spec.kappa());
}

TEST(Profile, HelixIsIndependentOfS) {
  const IntrinsicProfile helix(HelixSpec{2, 5});
  const KappaTau ref = eval_profile(helix, 0.0);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> sdist(-1e3, 1e3);
  for (int i = 0; i < 100; ++i) {
    const KappaTau kt = eval_profile(helix, sdist(rng));
    EXPECT_EQ(kt.kappa, ref.kappa);
    EXPECT_EQ(kt.tau, ref.tau);
  }
}

TEST(Profile, ConstantAndValidation) {
  const KappaTau kt = eval_profile(IntrinsicProfile(ConstantProfile{1, 0}), 10.0);
  EXPECT_EQ(kt.kappa, 1.0);
  EXPECT_EQ(kt.tau, 0.0);
  EXPECT_THROW(IntrinsicProfile(ConstantProfile{-0.1, 0}), InvalidArgument);
  EXPECT_THROW(IntrinsicProfile(HelixSpec{0, 1}), InvalidArgument);
  EXPECT_THROW(IntrinsicProfile(HelixSpec{1, -1}), InvalidArgument);
}

TEST(Profile, ExpressionProfilePropagatesDomainErrors) {
  const IntrinsicProfile p(ExpressionProfile{parse_expression("1/s"), parse_expression("0")});
  EXPECT_THROW(eval_profile(p, 0.0), DomainError);
  EXPECT_EQ(eval_profile(p, 2.0).kappa, 0.5);
}

TEST(Tabulated, ReproducesLinearDataBetweenNodes) {
  std::vector<double> s{0, 1, 2.5, 3, 7}, k, t;
  for (double x : s) {
    k.push_back(x);
    t.push_back(0.5 - 2 * x);
  }
  const TabulatedProfile tab(s, k, t);
  for (double x : {0.5, 1.75, 2.75, 5.0, 7.0, 0.0}) {
    EXPECT_NEAR(tab(x).kappa, x, 1e-14);
    EXPECT_NEAR(tab(x).tau, 0.5 - 2 * x, 1e-14);
  }
}

TEST(Tabulated, MonotoneDataDoesNotOvershoot) {
  const std::vector<double> s{0, 1, 2, 3, 4};
  const std::vector<double> k{0, 0, 0, 1, 1};
  const TabulatedProfile tab(s, k, k);
  for (double x = 0; x <= 4; x += 0.01) {
    const double v = tab(x).kappa;
    EXPECT_GE(v, -1e-15);
    EXPECT_LE(v, 1 + 1e-15);
  }
}

TEST(Tabulated, Errors) {
  EXPECT_THROW(TabulatedProfile({0}, {1}, {1}), InvalidArgument);
  EXPECT_THROW(TabulatedProfile({0, 0}, {1, 1}, {1, 1}), InvalidArgument);
  EXPECT_THROW(TabulatedProfile({0, 1}, {1}, {1, 1}), InvalidArgument);
  EXPECT_THROW(TabulatedProfile({0, 1}, {1, NAN}, {1, 1}), InvalidArgument);
  const TabulatedProfile tab({0, 1}, {1, 1}, {1, 1});
  EXPECT_THROW(tab(1.5), InvalidArgument);
  EXPECT_THROW(tab(-0.1), InvalidArgument);
}

TEST(AccumulatedTorsion, Examples) {
  EXPECT_NEAR(accumulated_torsion(IntrinsicProfile(ConstantProfile{0, 0.16}), 0, 5, 10), 0.8, 1e-15);
  const IntrinsicProfile sine(ExpressionProfile{parse_expression("1"), parse_expression("sin(s)")});
  // Composite Simpson error at n = 64 is pi h^4 / 180 * O(1), about 6.5e-8.
  EXPECT_NEAR(accumulated_torsion(sine, 0, std::numbers::pi, 64), 2.0, 1e-7);
  EXPECT_NEAR(accumulated_torsion(sine, 0, std::numbers::pi, 128), 2.0, 1e-8);
  const double e64 = accumulated_torsion(sine, 0, std::numbers::pi, 64) - 2.0;
  const double e128 = accumulated_torsion(sine, 0, std::numbers::pi, 128) - 2.0;
  EXPECT_NEAR(e64 / e128, 16.0, 0.1);
  EXPECT_NEAR(accumulated_torsion(IntrinsicProfile(HelixSpec{3, 4}), 0, 25, 50), 4.0, 1e-14);
  EXPECT_THROW(accumulated_torsion(sine, 0, 1, 3), InvalidArgument);
}

TEST(AccumulatedTorsion, IsAdditiveOnEvenSubgrids) {
  const IntrinsicProfile p(ExpressionProfile{parse_expression("1"), parse_expression("0.3 + 0.1*sin(s) + 0.05*s")});
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int i = 0; i < 20; ++i) {
    // Equal step on both pieces so the three sums see the same nodes.
    const double h = 1e-3 * u(rng);
    const double s0 = u(rng);
    const double s1 = s0 + 400 * h;
    const double s2 = s1 + 600 * h;
    const double whole = accumulated_torsion(p, s0, s2, 1000);
    const double split = accumulated_torsion(p, s0, s1, 400) + accumulated_torsion(p, s1, s2, 600);
    EXPECT_NEAR(whole, split, 1e-12 * std::abs(whole));
  }
}

TEST(Grid, Construction) {
  const ArcLengthGrid g(0, 1, 4);
  EXPECT_EQ(g.size(), 5u);
  EXPECT_EQ(g.step(), 0.25);
  EXPECT_EQ(g[4], 1.0);
  EXPECT_THROW(ArcLengthGrid(0, 1, 3), InvalidArgument);
  EXPECT_THROW(ArcLengthGrid(0, 1, 0), InvalidArgument);
  EXPECT_THROW(ArcLengthGrid(1, 1, 2), InvalidArgument);
  EXPECT_THROW(ArcLengthGrid(0, INFINITY, 2), InvalidArgument);

  const ArcLengthGrid d = ArcLengthGrid::with_max_step(0, 10 * std::numbers::pi, 1e-2);
  EXPECT_EQ(d.intervals() % 2, 0u);
  EXPECT_LE(d.step(), 1e-2);
  EXPECT_GT(d.step(), 0.99e-2);
}
