#include "lagrel/vrp.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "lagrel/errors.h"
#include "lagrel/seeding.h"

namespace lagrel {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double TourCost(const VrpInstance& instance, const std::vector<int>& stops) {
  double total = 0.0;
  int at = 0;
  for (int node : stops) {
    total += instance.cost(at, node);
    at = node;
  }
  return total + instance.cost(at, 0);
}

}  // namespace

VrpInstance::VrpInstance(Matrix cost, std::vector<double> demand,
                         double capacity, int vehicles)
    : cost_(std::move(cost)),
      demand_(std::move(demand)),
      capacity_(capacity),
      vehicles_(vehicles) {
  const auto n = cost_.rows();
  if (cost_.cols() != n) throw DomainError("cost matrix must be square");
  if (n < 2 || n > kMaxNodes) {
    throw DomainError("need 2 <= nodes <= " + std::to_string(kMaxNodes));
  }
  if (static_cast<Eigen::Index>(demand_.size()) != n - 1) {
    throw DomainError("one demand per customer required");
  }
  if (!cost_.array().isFinite().all()) {
    throw DomainError("costs must be finite");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (cost_(i, i) != 0.0) throw DomainError("cost diagonal must be zero");
  }
  for (double q : demand_) {
    if (!(q > 0.0)) throw DomainError("demands must be positive");
  }
  if (!(capacity_ > 0.0)) throw DomainError("capacity must be positive");
  if (vehicles_ < 1) throw DomainError("need at least one vehicle");
}

double VrpInstance::Load(std::uint32_t customers) const {
  double load = 0.0;
  for (int i = 0; i < num_customers(); ++i) {
    if ((customers >> i) & 1u) load += demand_[i];
  }
  return load;
}

VrpInstance RandomVrpInstance(int num_nodes, int vehicles, double capacity,
                              std::uint64_t seed) {
  if (num_nodes < 2 || num_nodes > VrpInstance::kMaxNodes) {
    throw DomainError("need 2 <= nodes <= " +
                      std::to_string(VrpInstance::kMaxNodes));
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  std::uniform_int_distribution<int> units(1, 3);
  std::vector<double> x(num_nodes);
  std::vector<double> y(num_nodes);
  for (int i = 0; i < num_nodes; ++i) {
    x[i] = coord(rng);
    y[i] = coord(rng);
  }
  Matrix cost(num_nodes, num_nodes);
  for (int i = 0; i < num_nodes; ++i) {
    for (int j = 0; j < num_nodes; ++j) {
      cost(i, j) = i == j ? 0.0 : std::hypot(x[i] - x[j], y[i] - y[j]);
    }
  }
  std::vector<double> demand(num_nodes - 1);
  for (double& q : demand) q = units(rng);
  return VrpInstance(std::move(cost), std::move(demand), capacity, vehicles);
}

std::vector<VrpRoute> HeldKarpRoutes(const VrpInstance& instance) {
  const int n = instance.num_customers();
  const std::uint32_t full = 1u << n;
  // best[mask][j]: cheapest path depot -> all of mask, ending at customer j.
  std::vector<std::vector<double>> best(full, std::vector<double>(n, kInf));
  std::vector<std::vector<int>> parent(full, std::vector<int>(n, -1));
  for (int j = 0; j < n; ++j) best[1u << j][j] = instance.cost(0, j + 1);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    for (int j = 0; j < n; ++j) {
      if (!((mask >> j) & 1u) || best[mask][j] == kInf) continue;
      for (int next = 0; next < n; ++next) {
        if ((mask >> next) & 1u) continue;
        const std::uint32_t grown = mask | (1u << next);
        const double cost = best[mask][j] + instance.cost(j + 1, next + 1);
        if (cost < best[grown][next]) {
          best[grown][next] = cost;
          parent[grown][next] = j;
        }
      }
    }
  }

  std::vector<VrpRoute> routes(full);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    double cheapest = kInf;
    int last = -1;
    for (int j = 0; j < n; ++j) {
      if (!((mask >> j) & 1u)) continue;
      const double cost = best[mask][j] + instance.cost(j + 1, 0);
      if (cost < cheapest) {
        cheapest = cost;
        last = j;
      }
    }
    VrpRoute& route = routes[mask];
    route.cost = cheapest;
    std::uint32_t rest = mask;
    for (int at = last; at >= 0;) {
      route.stops.push_back(at + 1);
      const int prev = parent[rest][at];
      rest &= ~(1u << at);
      at = prev;
    }
    std::reverse(route.stops.begin(), route.stops.end());
  }
  return routes;
}

VrpRoute BestRouteByEnumeration(const VrpInstance& instance,
                                std::uint32_t customers) {
  std::vector<int> order;
  for (int i = 0; i < instance.num_customers(); ++i) {
    if ((customers >> i) & 1u) order.push_back(i + 1);
  }
  VrpRoute best{order, TourCost(instance, order)};
  while (std::next_permutation(order.begin(), order.end())) {
    const double cost = TourCost(instance, order);
    if (cost < best.cost) best = {order, cost};
  }
  return best;
}

VehicleSubproblemResult SolveVehicleSubproblem(const VrpInstance& instance,
                                               const Vector& pi) {
  const int n = instance.num_customers();
  if (pi.size() != n) {
    throw DimensionError("need one multiplier per customer");
  }
  const std::vector<VrpRoute> routes = HeldKarpRoutes(instance);
  VehicleSubproblemResult out;
  out.value = kInf;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (instance.Load(mask) > instance.capacity()) continue;
    double value = routes[mask].cost;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) value += pi[i];
    }
    if (value < out.value) {
      out.value = value;
      out.route = routes[mask];
    }
  }
  if (out.value == kInf) {
    throw InfeasibleError("no customer fits within the vehicle capacity");
  }
  return out;
}

double VrpDualBound(const VrpInstance& instance, const Vector& pi) {
  return instance.vehicles() * SolveVehicleSubproblem(instance, pi).value -
         pi.sum();
}

VrpSolution VrpOptBruteForce(const VrpInstance& instance) {
  const int n = instance.num_customers();
  const int k = instance.vehicles();
  if (k > 3) throw UnsupportedError("brute-force OPT supports K <= 3");
  if (k > n) {
    throw InfeasibleError("more vehicles than customers; every route must "
                          "visit at least one customer");
  }
  std::vector<std::optional<VrpRoute>> memo(std::size_t{1} << n);
  auto route_for = [&](std::uint32_t mask) -> const VrpRoute& {
    if (!memo[mask]) memo[mask] = BestRouteByEnumeration(instance, mask);
    return *memo[mask];
  };

  long long assignments = 1;
  for (int i = 0; i < n; ++i) assignments *= k;
  VrpSolution best;
  best.value = kInf;
  std::vector<std::uint32_t> loads(k);
  for (long long code = 0; code < assignments; ++code) {
    std::fill(loads.begin(), loads.end(), 0u);
    long long rest = code;
    for (int i = 0; i < n; ++i) {
      loads[rest % k] |= 1u << i;
      rest /= k;
    }
    bool feasible = true;
    for (std::uint32_t mask : loads) {
      if (mask == 0 || instance.Load(mask) > instance.capacity()) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    double total = 0.0;
    for (std::uint32_t mask : loads) total += route_for(mask).cost;
    if (total < best.value) {
      best.value = total;
      best.routes.clear();
      for (std::uint32_t mask : loads) best.routes.push_back(route_for(mask));
    }
  }
  if (best.value == kInf) {
    throw InfeasibleError("no capacity-feasible assignment of customers");
  }
  return best;
}

VrpDualState VrpDualAscent(const VrpInstance& instance,
                           const VrpAscentConfig& config) {
  if (config.iterations < 0) throw ConfigError("iterations must be >= 0");
  const int n = instance.num_customers();
  const double scale =
      config.step_scale.value_or(0.5 * instance.costs().maxCoeff());

  VrpDualState state;
  state.pi = Vector::Zero(n);
  VehicleSubproblemResult sub = SolveVehicleSubproblem(instance, state.pi);
  state.initial_bound = instance.vehicles() * sub.value - state.pi.sum();
  state.best_bound = state.initial_bound;
  state.best_pi = state.pi;
  state.best_history.push_back(state.best_bound);

  Vector gradient(n);
  for (int t = 1; t <= config.iterations; ++t) {
    gradient.setConstant(-1.0);
    for (int node : sub.route.stops) gradient[node - 1] += instance.vehicles();
    state.pi += (scale / std::sqrt(static_cast<double>(t))) * gradient;
    sub = SolveVehicleSubproblem(instance, state.pi);
    const double bound = instance.vehicles() * sub.value - state.pi.sum();
    if (bound > state.best_bound) {
      state.best_bound = bound;
      state.best_pi = state.pi;
    }
    state.best_history.push_back(state.best_bound);
    state.iterations = t;
  }
  if (config.compute_opt) {
    state.opt = VrpOptBruteForce(instance).value;
    state.gap = *state.opt - state.best_bound;
  }
  return state;
}

}  // namespace lagrel
