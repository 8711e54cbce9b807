#include "lagrel/bounds.h"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "lagrel/errors.h"
#include "lagrel/hard_family.h"
#include "lagrel/seeding.h"

namespace lagrel {
namespace {

std::vector<MilpInstance> FamilySample(int s, int n, std::uint64_t seed) {
  std::vector<int> v(s);
  for (int k = 0; k < s; ++k) v[k] = (k + 1) % 2;
  const HardFamilySpec spec(FamilyVariant::kDualLowerBound, v, 0.2, 3.0);
  Rng rng(seed);
  std::vector<MilpInstance> out;
  for (int i = 0; i < n; ++i) out.push_back(SampleInstance(spec, rng));
  return out;
}

TEST(BoundFormulaTest, Values) {
  EXPECT_NEAR(CoveringBound(4, 1.0, 1.0, 1.0), 8.788898309344878, 1e-12);
  EXPECT_NEAR(DudleyConstant(), 5.317361552716548, 1e-15);
  EXPECT_NEAR(DudleyBound(4, 1.0, 1.0, 100), 4.253889242173239, 1e-12);
  EXPECT_NEAR(SgaBound(4, 1.0, 1.0, 100), 0.8, 1e-15);
  EXPECT_NEAR(WarmStartBound(8, 2.0, 400), 0.02, 1e-15);
  EXPECT_LT(SgaBound(4, 1.0, 1.0, 100), 2 * DudleyBound(4, 1.0, 1.0, 100));
}

TEST(BoundFormulaTest, Limits) {
  EXPECT_LT(CoveringBound(4, 1.0, 1.0, 1e12), 1e-9);
  EXPECT_LT(DudleyBound(4, 1.0, 1.0, 1000000000000LL), 1e-4);
  EXPECT_THROW(CoveringBound(4, 1.0, 1.0, 0.0), DomainError);
  EXPECT_THROW(DudleyBound(4, 1.0, 1.0, 0), DomainError);
}

TEST(BoundFormulaTest, CoveringSuperlinearInS) {
  for (int s = 1; s <= 32; ++s) {
    EXPECT_GT(CoveringBound(2 * s, 1.0, 1.5, 0.5), 2 * CoveringBound(s, 1.0, 1.5, 0.5));
  }
}

TEST(BoundReportTest, RatioAndMonotonicity) {
  for (int s : {1, 2, 4, 9, 16}) {
    const BoundReport r = MakeBoundReport(s, 100, 1.0, 3.0);
    EXPECT_NEAR(r.dudley_bound / r.sga_bound, DudleyConstant() / 2 * std::sqrt(s), 1e-12);
    EXPECT_DOUBLE_EQ(r.erm_excess_bound, 2 * r.dudley_bound);
    const BoundReport more_n = MakeBoundReport(s, 400, 1.0, 3.0);
    const BoundReport more_s = MakeBoundReport(s + 1, 100, 1.0, 3.0);
    EXPECT_LE(more_n.dudley_bound, r.dudley_bound);
    EXPECT_LE(more_n.sga_bound, r.sga_bound);
    EXPECT_LE(more_n.warmstart_bound, r.warmstart_bound);
    EXPECT_GE(more_s.covering_log, r.covering_log);
    EXPECT_GE(more_s.dudley_bound, r.dudley_bound);
    EXPECT_GE(more_s.warmstart_bound, r.warmstart_bound);
  }
}

TEST(EmpiricalRademacherTest, SingleInstanceNonnegative) {
  const auto sample = FamilySample(1, 1, 3);
  const RademacherEstimate e = EmpiricalRademacher(sample, ProblemBounds(1.0, 3.0), 10, 200, 1);
  EXPECT_GE(e.grid_estimate, 0.0);
  EXPECT_DOUBLE_EQ(e.estimate, e.grid_estimate + e.grid_correction);
}

TEST(EmpiricalRademacherTest, BelowDudley) {
  const ProblemBounds bounds(1.0, 3.0);
  const auto sample = FamilySample(2, 50, 4);
  const RademacherEstimate e = EmpiricalRademacher(sample, bounds, 25, 2000, 11);
  EXPECT_LE(e.grid_estimate, DudleyBound(2, 1.0, 3.0, 50) + 3 * e.standard_error);
  EXPECT_NEAR(e.grid_correction, bounds.lipschitz(2) * bounds.diameter(2) / 25, 1e-15);
}

TEST(EmpiricalRademacherTest, DecreasesWithN) {
  const ProblemBounds bounds(1.0, 3.0);
  double previous = 1e300, previous_se = 0.0;
  for (int n : {25, 100, 400}) {
    const RademacherEstimate e =
        EmpiricalRademacher(FamilySample(2, n, 40), bounds, 15, 1000, 12);
    EXPECT_LE(e.grid_estimate, previous + 3 * (e.standard_error + previous_se));
    previous = e.grid_estimate;
    previous_se = e.standard_error;
  }
}

TEST(EmpiricalRademacherTest, DeterministicForSeed) {
  const auto sample = FamilySample(2, 20, 5);
  const ProblemBounds bounds(1.0, 3.0);
  EXPECT_EQ(EmpiricalRademacher(sample, bounds, 8, 300, 77).grid_estimate,
            EmpiricalRademacher(sample, bounds, 8, 300, 77).grid_estimate);
}

TEST(EmpiricalRademacherTest, Preconditions) {
  const ProblemBounds bounds(1.0, 3.0);
  EXPECT_THROW(EmpiricalRademacher(FamilySample(4, 5, 1), bounds, 5, 100, 1), UnsupportedError);
  EXPECT_THROW(EmpiricalRademacher(FamilySample(2, 5, 1), bounds, 5, 99, 1), DomainError);
  EXPECT_THROW(EmpiricalRademacher(FamilySample(2, 5, 1), bounds, 1, 100, 1), DomainError);
}

}  // namespace
}  // namespace lagrel
