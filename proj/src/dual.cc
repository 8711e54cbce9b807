#include "lagrel/dual.h"

#include <cmath>
#include <string>

#include "lagrel/errors.h"

namespace lagrel {
namespace {

constexpr int kTikhonovStages = 3;
constexpr double kTikhonovInitialWeight = 1e-2;

double StepSize(const DualSolveConfig& config, double scale, int t) {
  switch (config.schedule) {
    case StepSchedule::kConstant:
      return scale;
    case StepSchedule::kInverseSqrt:
      return scale / std::sqrt(static_cast<double>(t));
  }
  return scale;
}

}  // namespace

DualEval EvaluateDual(const MultiplierVector& pi, const MilpInstance& instance,
                      int enumeration_limit) {
  SubproblemSolution sub = SolveSubproblem(pi, instance, enumeration_limit);
  DualEval eval;
  eval.value = sub.value;
  eval.subgradient = instance.b() - instance.A() * sub.x_star;
  eval.x_star = std::move(sub.x_star);
  return eval;
}

DualSolveResult SolveDual(const MilpInstance& instance,
                          const ProblemBounds& bounds,
                          const DualSolveConfig& config) {
  if (config.iterations < 1) throw ConfigError("dual solve needs T >= 1");
  if (!(config.norm_regularizer_weight >= 0.0)) {
    throw ConfigError("norm regularizer weight must be >= 0");
  }
  const int s = instance.num_coupling();
  const double pi_max = bounds.pi_max();
  const double lambda = config.norm_regularizer_weight;
  const double scale = config.step_scale.value_or(bounds.diameter(s) /
                                                  bounds.lipschitz(s));

  Vector start = config.initial_point.value_or(Vector::Zero(s));
  if (start.size() != s) {
    throw DimensionError("initial point has length " +
                         std::to_string(start.size()) + ", expected " +
                         std::to_string(s));
  }
  MultiplierVector pi = MultiplierVector::Project(start, pi_max);

  DualEval eval = EvaluateDual(pi, instance, config.enumeration_limit);
  auto objective = [&](const MultiplierVector& point, double value) {
    return value - lambda * point.values().squaredNorm();
  };
  DualSolveResult best{pi, eval.value, 0};
  double best_objective = objective(pi, eval.value);

  for (int t = 1; t <= config.iterations; ++t) {
    const Vector direction = eval.subgradient - 2.0 * lambda * pi.values();
    pi = MultiplierVector::Project(
        pi.values() + StepSize(config, scale, t) * direction, pi_max);
    eval = EvaluateDual(pi, instance, config.enumeration_limit);
    const double current = objective(pi, eval.value);
    if (current > best_objective) {
      best_objective = current;
      best = {pi, eval.value, t};
    }
  }
  return best;
}

MinNormResult MinNormPiStar(const MilpInstance& instance,
                            const ProblemBounds& bounds,
                            const DualSolveConfig& config) {
  const double pi_max = bounds.pi_max();
  if (instance.is_restricted_form()) {
    // u(., P) separates into min(pi_k/2, c_k - pi_k/2), increasing on
    // [0, c_k] and decreasing beyond, so the box maximizer is unique.
    return {MultiplierVector::Project(instance.c().cwiseMax(0.0), pi_max),
            true};
  }
  DualSolveConfig stage = config;
  double weight = config.norm_regularizer_weight > 0.0
                      ? config.norm_regularizer_weight
                      : kTikhonovInitialWeight;
  std::optional<MultiplierVector> current;
  for (int j = 0; j < kTikhonovStages; ++j) {
    stage.norm_regularizer_weight = weight;
    if (current) stage.initial_point = current->values();
    current = SolveDual(instance, bounds, stage).pi_hat;
    weight *= 0.5;
  }
  return {*current, false};
}

}  // namespace lagrel
