#ifndef LAGREL_BOUNDS_H_
#define LAGREL_BOUNDS_H_

#include <cstdint>
#include <span>

#include "lagrel/instance.h"

namespace lagrel {

// 3 sqrt(pi), assembled from the entropy-integral bound 3 L D sqrt(pi) / 2
// with L = 2 B sqrt(s) and D = pi_max sqrt(s). The order s^1.5 / sqrt(N) is
// the theory's; the constant is this implementation's.
double DudleyConstant();

// s ln(1 + 2 B pi_max s / delta). Natural log throughout.
double CoveringBound(int s, double violation_bound, double pi_max,
                     double delta);

// C B pi_max s^1.5 / sqrt(N) with C = DudleyConstant().
double DudleyBound(int s, double violation_bound, double pi_max,
                   long long num_samples);

// 2 B pi_max s / sqrt(N).
double SgaBound(int s, double violation_bound, double pi_max,
                long long num_samples);

// s pi_max^2 / (4 N).
double WarmStartBound(int s, double pi_max, long long num_samples);

struct BoundReport {
  int s = 0;
  long long num_samples = 0;
  double violation_bound = 0.0;
  double pi_max = 0.0;
  double delta = 0.0;
  double covering_log = 0.0;
  double dudley_bound = 0.0;
  double sga_bound = 0.0;
  // 2 * dudley_bound.
  double erm_excess_bound = 0.0;
  double warmstart_bound = 0.0;
  double dudley_constant = 0.0;
};

BoundReport MakeBoundReport(int s, long long num_samples,
                            double violation_bound, double pi_max,
                            double delta = 1.0);

struct RademacherEstimate {
  // Monte Carlo mean of sup over the grid, before correction.
  double grid_estimate = 0.0;
  double standard_error = 0.0;
  // L pi_max sqrt(s) / G: bound on the gap between grid and box suprema.
  double grid_correction = 0.0;
  // grid_estimate + grid_correction.
  double estimate = 0.0;
};

// Estimates E_sigma sup_{pi in grid} (1/N) sum_i sigma_i u(pi, P_i) over a
// uniform G^s grid of the box with `draws` Rademacher vectors. Requires
// s <= 3, G >= 2, draws >= 100 (UnsupportedError / DomainError otherwise).
RademacherEstimate EmpiricalRademacher(std::span<const MilpInstance> sample,
                                       const ProblemBounds& bounds,
                                       int grid_points_per_dim, int draws,
                                       std::uint64_t seed);

}  // namespace lagrel

#endif  // LAGREL_BOUNDS_H_
