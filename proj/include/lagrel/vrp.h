#ifndef LAGREL_VRP_H_
#define LAGREL_VRP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "lagrel/instance.h"

namespace lagrel {

// Capacitated VRP with an identical fleet. Node 0 is the depot; customers
// are nodes 1..n-1.
class VrpInstance {
 public:
  static constexpr int kMaxNodes = 9;

  // demand[i] is the demand of customer i + 1. Throws DomainError unless the
  // cost matrix is n x n with zero diagonal, 2 <= n <= kMaxNodes, every demand
  // and the capacity are positive, and vehicles >= 1.
  VrpInstance(Matrix cost, std::vector<double> demand, double capacity,
              int vehicles);

  int num_nodes() const { return static_cast<int>(cost_.rows()); }
  int num_customers() const { return num_nodes() - 1; }
  double cost(int from, int to) const { return cost_(from, to); }
  const Matrix& costs() const { return cost_; }
  // Demand of customer node `node` (1-based).
  double demand(int node) const { return demand_[node - 1]; }
  double capacity() const { return capacity_; }
  int vehicles() const { return vehicles_; }

  // Bit i of `customers` stands for node i + 1.
  double Load(std::uint32_t customers) const;

 private:
  Matrix cost_;
  std::vector<double> demand_;
  double capacity_;
  int vehicles_;
};

// Points uniform in [0, 10]^2 with Euclidean costs and integer demands in
// {1, 2, 3}.
VrpInstance RandomVrpInstance(int num_nodes, int vehicles, double capacity,
                              std::uint64_t seed);

struct VrpRoute {
  // Customer nodes in visiting order, depot omitted at both ends.
  std::vector<int> stops;
  double cost = 0.0;
};

// Cheapest depot -> customers -> depot tour for every customer subset by
// Held-Karp subset DP; entry 0 is the empty tour.
std::vector<VrpRoute> HeldKarpRoutes(const VrpInstance& instance);

// Cheapest tour through `customers` by enumerating every visiting order.
VrpRoute BestRouteByEnumeration(const VrpInstance& instance,
                                std::uint32_t customers);

struct VehicleSubproblemResult {
  VrpRoute route;
  // Route cost plus the multipliers of the visited customers.
  double value = 0.0;
};

// min over nonempty capacity-feasible customer subsets S of
// tour(S) + sum_{i in S} pi_i. pi has one entry per customer.
// InfeasibleError if no single customer fits in a vehicle.
VehicleSubproblemResult SolveVehicleSubproblem(const VrpInstance& instance,
                                               const Vector& pi);

// f(pi) = K * (vehicle subproblem value) - sum_i pi_i.
double VrpDualBound(const VrpInstance& instance, const Vector& pi);

struct VrpSolution {
  double value = 0.0;
  std::vector<VrpRoute> routes;
};

// Exact OPT: every assignment of customers to vehicles with nonempty,
// capacity-feasible loads, each routed by BestRouteByEnumeration. Needs
// K <= 3; InfeasibleError if no assignment exists (e.g. K > customers).
VrpSolution VrpOptBruteForce(const VrpInstance& instance);

struct VrpAscentConfig {
  int iterations = 100;
  // eta_t = step_scale / sqrt(t); defaults to half the largest arc cost.
  std::optional<double> step_scale;
  // Compute OPT by brute force for the gap report.
  bool compute_opt = true;
};

struct VrpDualState {
  Vector pi;
  Vector best_pi;
  double initial_bound = 0.0;
  double best_bound = 0.0;
  int iterations = 0;
  // Best bound after each iteration, starting with f(0).
  std::vector<double> best_history;
  std::optional<double> opt;
  std::optional<double> gap;
};

// Subgradient ascent on f with g_i = (visits to i over all vehicles) - 1 and
// sign-unrestricted multipliers, starting from pi = 0.
VrpDualState VrpDualAscent(const VrpInstance& instance,
                           const VrpAscentConfig& config);

}  // namespace lagrel

#endif  // LAGREL_VRP_H_
