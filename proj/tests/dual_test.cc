#include "lagrel/dual.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lagrel/errors.h"
#include "oracles.h"

namespace lagrel {
namespace {

MilpInstance Restricted12() { return MakeRestrictedInstance(Vector{{1.0, 2.0}}); }

MultiplierVector RandomPi(std::mt19937_64& rng, int s, double pi_max) {
  const auto v = testing::RandomVector(rng, s, 0.0, pi_max);
  return MultiplierVector(Eigen::Map<const Vector>(v.data(), s), pi_max);
}

TEST(EvaluateDualTest, BelowKinks) {
  const DualEval e = EvaluateDual(MultiplierVector(Vector{{0.5, 1.0}}, 3.0), Restricted12());
  EXPECT_DOUBLE_EQ(e.value, 0.75);
  EXPECT_EQ(e.subgradient, (Vector{{0.5, 0.5}}));
  EXPECT_EQ(e.x_star, Vector::Zero(2));
}

TEST(EvaluateDualTest, KinkCrossed) {
  const DualEval e = EvaluateDual(MultiplierVector(Vector{{1.5, 1.0}}, 3.0), Restricted12());
  EXPECT_DOUBLE_EQ(e.value, 0.75);
  EXPECT_EQ(e.subgradient, (Vector{{-0.5, 0.5}}));
}

TEST(EvaluateDualTest, SubgradientInequalityRandomTriples) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> dim(1, 10);
  for (int rep = 0; rep < 1000; ++rep) {
    const int s = dim(rng);
    const auto c = testing::RandomVector(rng, s, 0.0, 3.0);
    const MilpInstance p = MakeRestrictedInstance(Eigen::Map<const Vector>(c.data(), s));
    const MultiplierVector pi = RandomPi(rng, s, 3.0);
    const MultiplierVector pi2 = RandomPi(rng, s, 3.0);
    const DualEval e = EvaluateDual(pi, p);
    const double rhs = e.value + e.subgradient.dot(pi2.values() - pi.values());
    EXPECT_LE(EvaluateDual(pi2, p).value, rhs + 1e-12);
    // pi' = pi gives equality.
    EXPECT_DOUBLE_EQ(EvaluateDual(pi, p).value, e.value);
  }
}

TEST(EvaluateDualTest, NormAndLipschitzBounds) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 10);
  for (int rep = 0; rep < 500; ++rep) {
    const int s = dim(rng);
    const auto c = testing::RandomVector(rng, s, -1.0, 3.0);
    const MilpInstance p = MakeRestrictedInstance(Eigen::Map<const Vector>(c.data(), s));
    const ProblemBounds bounds(1.0, 3.0);
    ASSERT_TRUE(ValidateBounds(p, bounds).passed);
    const MultiplierVector pi = RandomPi(rng, s, 3.0);
    const MultiplierVector pi2 = RandomPi(rng, s, 3.0);
    const DualEval e = EvaluateDual(pi, p);
    EXPECT_LE(e.subgradient.norm(), bounds.lipschitz(s) + 1e-12);
    EXPECT_LE(std::abs(e.value - EvaluateDual(pi2, p).value),
              bounds.lipschitz(s) * (pi.values() - pi2.values()).norm() + 1e-12);
  }
}

TEST(EvaluateDualTest, GeneralInstanceSubgradient) {
  // min x1 + 3x2 + 2x3 with 2x1 + x2 + 2x3 >= 3 dualized.
  const MilpInstance p(Vector{{1.0, 3.0, 2.0}}, Matrix{{2.0, 1.0, 2.0}},
                       Vector{{3.0}}, Matrix(0, 3), Vector(0), 0, 3);
  const DualEval e = EvaluateDual(MultiplierVector(Vector{{1.0}}, 5.0), p);
  // Reduced costs (-1, 2, 0): x* = (1,0,0), u = 1 + 1*(3 - 2) = 2.
  EXPECT_DOUBLE_EQ(e.value, 2.0);
  EXPECT_EQ(e.x_star, (Vector{{1.0, 0.0, 0.0}}));
  EXPECT_EQ(e.subgradient, (Vector{{1.0}}));
}

TEST(SolveDualTest, RestrictedTraceAtTwoThousandIterations) {
  // Frozen from an independent replay of the 1.5 / sqrt(t) iteration. Late
  // iterates still swing by about 0.75 / sqrt(T) ~ 0.017 around c_1.
  DualSolveConfig cfg;
  cfg.iterations = 2000;
  const DualSolveResult r = SolveDual(Restricted12(), ProblemBounds(1.0, 3.0), cfg);
  EXPECT_NEAR(r.value, 1.4916147434963647, 1e-12);
  EXPECT_NEAR(r.pi_hat[0], 1.0167663188069374, 1e-12);
  EXPECT_NEAR(r.pi_hat[1], 1.9999958057996667, 1e-12);
  EXPECT_NEAR(r.value, 1.5, 1e-2);
}

TEST(SolveDualTest, ConvergesOnRestricted) {
  DualSolveConfig cfg;
  cfg.iterations = 10000;
  const DualSolveResult r = SolveDual(Restricted12(), ProblemBounds(1.0, 3.0), cfg);
  EXPECT_NEAR(r.value, 1.5, 1e-2);
  EXPECT_NEAR(r.pi_hat[0], 1.0, 1e-2);
  EXPECT_NEAR(r.pi_hat[1], 2.0, 1e-2);
}

TEST(SolveDualTest, StartAtOptimumKeepsValue) {
  DualSolveConfig cfg;
  cfg.iterations = 1;
  cfg.initial_point = Vector{{1.0, 2.0}};
  const DualSolveResult r = SolveDual(Restricted12(), ProblemBounds(1.0, 3.0), cfg);
  EXPECT_DOUBLE_EQ(r.value, 1.5);
  EXPECT_EQ(r.best_iteration, 0);
  EXPECT_EQ(r.pi_hat.values(), (Vector{{1.0, 2.0}}));
}

TEST(SolveDualTest, BestValueNonDecreasingInIterations) {
  std::mt19937_64 rng(5);
  const auto c = testing::RandomVector(rng, 6, 0.0, 3.0);
  const MilpInstance p = MakeRestrictedInstance(Eigen::Map<const Vector>(c.data(), 6));
  double previous = -1e300;
  for (int t : {1, 2, 5, 10, 50, 200, 1000}) {
    DualSolveConfig cfg;
    cfg.iterations = t;
    const double value = SolveDual(p, ProblemBounds(1.0, 3.0), cfg).value;
    EXPECT_GE(value, previous);
    previous = value;
  }
}

TEST(SolveDualTest, ConstantScheduleStaysInBox) {
  DualSolveConfig cfg;
  cfg.iterations = 100;
  cfg.schedule = StepSchedule::kConstant;
  cfg.step_scale = 10.0;
  const DualSolveResult r = SolveDual(Restricted12(), ProblemBounds(1.0, 3.0), cfg);
  EXPECT_GE(r.pi_hat.values().minCoeff(), 0.0);
  EXPECT_LE(r.pi_hat.values().maxCoeff(), 3.0);
}

TEST(SolveDualTest, RejectsBadConfig) {
  DualSolveConfig cfg;
  cfg.iterations = 0;
  EXPECT_THROW(SolveDual(Restricted12(), ProblemBounds(1.0, 3.0), cfg), ConfigError);
  cfg.iterations = 10;
  cfg.norm_regularizer_weight = -1.0;
  EXPECT_THROW(SolveDual(Restricted12(), ProblemBounds(1.0, 3.0), cfg), ConfigError);
}

TEST(MinNormPiStarTest, ClosedFormCases) {
  MinNormResult r = MinNormPiStar(Restricted12(), ProblemBounds(1.0, 3.0));
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.pi.values(), (Vector{{1.0, 2.0}}));

  r = MinNormPiStar(Restricted12(), ProblemBounds(1.0, 1.5));
  EXPECT_EQ(r.pi.values(), (Vector{{1.0, 1.5}}));

  r = MinNormPiStar(MakeRestrictedInstance(Vector::Zero(3)), ProblemBounds(1.0, 3.0));
  EXPECT_EQ(r.pi.values(), Vector::Zero(3));
}

TEST(MinNormPiStarTest, RegularizedPathOnGeneralInstance) {
  // Restricted data routed through enumeration; the path should land near c.
  const MilpInstance p(Vector{{1.0, 2.0}}, Matrix::Identity(2, 2),
                       Vector::Constant(2, 0.5), Matrix::Zero(1, 2),
                       Vector::Constant(1, -1.0), 0, 2);
  DualSolveConfig cfg;
  cfg.iterations = 3000;
  const MinNormResult r = MinNormPiStar(p, ProblemBounds(1.0, 3.0), cfg);
  EXPECT_FALSE(r.exact);
  EXPECT_NEAR(r.pi[0], 1.0, 5e-2);
  EXPECT_NEAR(r.pi[1], 2.0, 5e-2);
}

}  // namespace
}  // namespace lagrel
