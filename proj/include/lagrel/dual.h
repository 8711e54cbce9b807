#ifndef LAGREL_DUAL_H_
#define LAGREL_DUAL_H_

#include <optional>

#include "lagrel/instance.h"
#include "lagrel/subproblem.h"

namespace lagrel {

// Value u(pi, P), supergradient g = b - A x*, and the minimizer behind both.
struct DualEval {
  double value = 0.0;
  Vector subgradient;
  Vector x_star;
};

DualEval EvaluateDual(const MultiplierVector& pi, const MilpInstance& instance,
                      int enumeration_limit = kDefaultEnumerationLimit);

enum class StepSchedule {
  kConstant,     // eta_t = step_scale
  kInverseSqrt,  // eta_t = step_scale / sqrt(t)
};

struct DualSolveConfig {
  int iterations = 1000;
  // Defaults to the origin.
  std::optional<Vector> initial_point;
  StepSchedule schedule = StepSchedule::kInverseSqrt;
  // Defaults to D / L from the problem bounds.
  std::optional<double> step_scale;
  // Weight of the -lambda ||pi||^2 term used to pick small-norm maximizers.
  double norm_regularizer_weight = 0.0;
  int enumeration_limit = kDefaultEnumerationLimit;
};

struct DualSolveResult {
  MultiplierVector pi_hat;
  // u(pi_hat, P), unregularized.
  double value = 0.0;
  // Iteration (0 = initial point) at which pi_hat was visited.
  int best_iteration = 0;
};

// Projected subgradient ascent on u(., P) - lambda ||.||^2 over the box,
// returning the best iterate seen (initial point included).
DualSolveResult SolveDual(const MilpInstance& instance,
                          const ProblemBounds& bounds,
                          const DualSolveConfig& config);

struct MinNormResult {
  MultiplierVector pi;
  // False when produced by the regularization path instead of the closed form.
  bool exact = false;
};

// Minimum-norm maximizer of u(., P) over the box. Closed form for
// restricted-form instances: clip(max(c, 0), 0, pi_max). Otherwise a
// Tikhonov path lambda_j = lambda_0 2^-j over three warm-started stages,
// reported as approximate.
MinNormResult MinNormPiStar(const MilpInstance& instance,
                            const ProblemBounds& bounds,
                            const DualSolveConfig& config = {});

}  // namespace lagrel

#endif  // LAGREL_DUAL_H_
