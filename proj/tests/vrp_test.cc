#include "lagrel/vrp.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lagrel/errors.h"

namespace lagrel {
namespace {

// Nodes on a line: cost |i - j|.
VrpInstance LineInstance(int customers, int vehicles, double capacity) {
  const int n = customers + 1;
  Matrix cost(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cost(i, j) = std::abs(i - j);
  return VrpInstance(cost, std::vector<double>(customers, 1.0), capacity, vehicles);
}

VrpInstance OneCustomer() {
  return VrpInstance(Matrix{{0.0, 2.0}, {3.0, 0.0}}, {1.0}, 1.0, 1);
}

TEST(VrpInstanceTest, Validation) {
  EXPECT_THROW(VrpInstance(Matrix{{0.0, 1.0}, {1.0, 1.0}}, {1.0}, 1.0, 1), DomainError);
  EXPECT_THROW(VrpInstance(Matrix{{0.0, 1.0}, {1.0, 0.0}}, {0.0}, 1.0, 1), DomainError);
  EXPECT_THROW(VrpInstance(Matrix{{0.0, 1.0}, {1.0, 0.0}}, {1.0}, 0.0, 1), DomainError);
  EXPECT_THROW(VrpInstance(Matrix{{0.0, 1.0}, {1.0, 0.0}}, {1.0}, 1.0, 0), DomainError);
  EXPECT_THROW(VrpInstance(Matrix::Zero(10, 10), std::vector<double>(9, 1.0), 1.0, 1),
               DomainError);
  EXPECT_DOUBLE_EQ(LineInstance(3, 1, 5.0).Load(0b101), 2.0);
}

TEST(HeldKarpTest, MatchesPermutationEnumeration) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int nodes = 2 + static_cast<int>(seed % 5);
    const VrpInstance inst = RandomVrpInstance(nodes, 1, 100.0, seed);
    const auto routes = HeldKarpRoutes(inst);
    for (std::uint32_t mask = 1; mask < (1u << inst.num_customers()); ++mask) {
      const VrpRoute brute = BestRouteByEnumeration(inst, mask);
      EXPECT_NEAR(routes[mask].cost, brute.cost, 1e-12) << seed << " " << mask;
      double replay = 0.0;
      int at = 0;
      for (int stop : routes[mask].stops) {
        replay += inst.cost(at, stop);
        at = stop;
      }
      replay += inst.cost(at, 0);
      EXPECT_NEAR(replay, routes[mask].cost, 1e-12);
    }
  }
}

TEST(VehicleSubproblemTest, OneCustomer) {
  const VrpInstance inst = OneCustomer();
  for (double pi : {-4.0, 0.0, 2.5}) {
    const VehicleSubproblemResult r = SolveVehicleSubproblem(inst, Vector{{pi}});
    EXPECT_EQ(r.route.stops, std::vector<int>{1});
    EXPECT_DOUBLE_EQ(r.value, 5.0 + pi);
  }
}

TEST(VehicleSubproblemTest, TwoCustomersAgainstEnumeration) {
  Matrix cost{{0, 2, 3}, {2, 0, 1.5}, {3, 1.5, 0}};
  const VrpInstance inst(cost, {1.0, 1.0}, 2.0, 1);
  for (const Vector& pi : {Vector{{0.0, 0.0}}, Vector{{-3.0, -3.0}}, Vector{{1.0, -2.0}}}) {
    double best = 1e300;
    for (std::uint32_t mask = 1; mask < 4; ++mask) {
      double value = BestRouteByEnumeration(inst, mask).cost;
      for (int i = 0; i < 2; ++i)
        if (mask >> i & 1) value += pi[i];
      best = std::min(best, value);
    }
    EXPECT_NEAR(SolveVehicleSubproblem(inst, pi).value, best, 1e-12);
  }
}

TEST(VehicleSubproblemTest, LargeMultipliersPickCheapestSingleton) {
  Matrix cost{{0, 2, 3}, {2, 0, 1.5}, {3, 1.5, 0}};
  const VrpInstance inst(cost, {1.0, 1.0}, 2.0, 1);
  const VehicleSubproblemResult r = SolveVehicleSubproblem(inst, Vector{{1e6, 1e6}});
  EXPECT_EQ(r.route.stops, std::vector<int>{1});
  EXPECT_DOUBLE_EQ(r.value, 4.0 + 1e6);
}

TEST(VehicleSubproblemTest, NothingFits) {
  const VrpInstance inst(Matrix{{0.0, 1.0}, {1.0, 0.0}}, {3.0}, 2.0, 1);
  EXPECT_THROW(SolveVehicleSubproblem(inst, Vector{{0.0}}), InfeasibleError);
}

TEST(VrpDualBoundTest, OneCustomerEqualsOptEverywhere) {
  const VrpInstance inst = OneCustomer();
  EXPECT_DOUBLE_EQ(VrpOptBruteForce(inst).value, 5.0);
  for (double pi : {-10.0, -1.0, 0.0, 0.3, 7.0}) {
    EXPECT_DOUBLE_EQ(VrpDualBound(inst, Vector{{pi}}), 5.0);
  }
}

TEST(VrpDualBoundTest, ZeroMultipliers) {
  const VrpInstance inst = LineInstance(3, 2, 10.0);
  const Vector zero = Vector::Zero(3);
  EXPECT_DOUBLE_EQ(VrpDualBound(inst, zero), 2 * SolveVehicleSubproblem(inst, zero).value);
}

TEST(VrpOptTest, Examples) {
  // {1} and {2,3}: 2 + 6.
  EXPECT_DOUBLE_EQ(VrpOptBruteForce(LineInstance(3, 2, 10.0)).value, 8.0);
  // Two vehicles with two customers: each served alone.
  EXPECT_DOUBLE_EQ(VrpOptBruteForce(LineInstance(2, 2, 10.0)).value, 2.0 + 4.0);
  EXPECT_THROW(VrpOptBruteForce(LineInstance(2, 3, 10.0)), InfeasibleError);
  // Capacity 1 with three unit demands cannot fit on two vehicles.
  EXPECT_THROW(VrpOptBruteForce(LineInstance(3, 2, 1.0)), InfeasibleError);
}

TEST(VrpWeakDualityTest, RandomInstancesAndMultipliers) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> normal(0.0, 5.0);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const int nodes = 3 + static_cast<int>(seed % 4);
    const VrpInstance inst = RandomVrpInstance(nodes, 2, 6.0, seed + 100);
    double opt;
    try {
      opt = VrpOptBruteForce(inst).value;
    } catch (const InfeasibleError&) {
      continue;
    }
    for (int rep = 0; rep < 20; ++rep) {
      Vector pi(inst.num_customers());
      for (int i = 0; i < pi.size(); ++i) pi[i] = normal(rng);
      EXPECT_LE(VrpDualBound(inst, pi), opt + 1e-9);
    }
  }
}

TEST(VrpDualAscentTest, ZeroIterations) {
  const VrpInstance inst = LineInstance(3, 2, 10.0);
  const VrpDualState st = VrpDualAscent(inst, {.iterations = 0});
  EXPECT_DOUBLE_EQ(st.best_bound, VrpDualBound(inst, Vector::Zero(3)));
  EXPECT_EQ(st.iterations, 0);
}

TEST(VrpDualAscentTest, OneCustomerAtOpt) {
  const VrpDualState st = VrpDualAscent(OneCustomer(), {.iterations = 1});
  ASSERT_TRUE(st.opt.has_value());
  EXPECT_DOUBLE_EQ(st.best_bound, *st.opt);
  EXPECT_DOUBLE_EQ(*st.gap, 0.0);
}

TEST(VrpDualAscentTest, GridInstanceMonotoneAndBelowOpt) {
  const VrpDualState st = VrpDualAscent(LineInstance(3, 2, 10.0), {.iterations = 200});
  ASSERT_EQ(st.best_history.size(), 201u);
  for (std::size_t i = 1; i < st.best_history.size(); ++i) {
    EXPECT_GE(st.best_history[i], st.best_history[i - 1]);
  }
  EXPECT_LE(st.best_bound, 8.0 + 1e-9);
  EXPECT_GE(st.best_bound, st.initial_bound);
  EXPECT_NEAR(*st.gap, 8.0 - st.best_bound, 1e-12);
}

}  // namespace
}  // namespace lagrel
