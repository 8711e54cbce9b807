#include "lagrel/learners.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace lagrel {
namespace {

int CommonDimension(std::span<const MilpInstance> sample) {
  if (sample.empty()) throw ConfigError("learner needs at least one instance");
  const int s = sample.front().num_coupling();
  for (std::size_t i = 1; i < sample.size(); ++i) {
    if (sample[i].num_coupling() != s) {
      throw InstanceError(i, "coupling dimension " +
                                 std::to_string(sample[i].num_coupling()) +
                                 " differs from " + std::to_string(s));
    }
  }
  return s;
}

template <typename Fn>
auto AtInstance(std::size_t index, Fn&& fn) {
  try {
    return fn();
  } catch (const InstanceError&) {
    throw;
  } catch (const Error& e) {
    throw InstanceError(index, e.what());
  }
}

}  // namespace

std::string_view LearnerName(LearnerKind kind) {
  switch (kind) {
    case LearnerKind::kSga:
      return "sga";
    case LearnerKind::kErm:
      return "erm";
    case LearnerKind::kWarmStart:
      return "warmstart";
  }
  return "unknown";
}

LearnerKind ParseLearner(std::string_view name) {
  if (name == "sga") return LearnerKind::kSga;
  if (name == "erm") return LearnerKind::kErm;
  if (name == "warmstart") return LearnerKind::kWarmStart;
  throw ConfigError("unknown learner '" + std::string(name) + "'");
}

LearnedMultipliers SgaLearn(std::span<const MilpInstance> stream,
                            const SgaConfig& config) {
  const int s = CommonDimension(stream);
  const auto n = static_cast<double>(stream.size());
  const double eta = config.step.value_or(
      config.pi_max / (2.0 * config.violation_bound * std::sqrt(n)));
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw ConfigError("SGA step must be a finite nonnegative number");
  }

  MultiplierVector pi = MultiplierVector::Zero(s, config.pi_max);
  Vector running_sum = Vector::Zero(s);
  for (std::size_t t = 0; t < stream.size(); ++t) {
    running_sum += pi.values();
    const DualEval eval =
        AtInstance(t, [&] { return EvaluateDual(pi, stream[t]); });
    pi = MultiplierVector::Project(pi.values() + eta * eval.subgradient,
                                   config.pi_max);
  }
  return {MultiplierVector::Project(running_sum / n, config.pi_max),
          LearnerKind::kSga, stream.size(), config.seed,
          static_cast<long long>(stream.size())};
}

double EmpiricalDualValue(std::span<const MilpInstance> sample,
                          const MultiplierVector& pi) {
  double total = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    total += AtInstance(i, [&] { return EvaluateDual(pi, sample[i]).value; });
  }
  return total / static_cast<double>(sample.size());
}

LearnedMultipliers ErmLearn(std::span<const MilpInstance> sample,
                            const ProblemBounds& bounds,
                            const ErmConfig& config) {
  const int s = CommonDimension(sample);
  const auto n = static_cast<double>(sample.size());
  const long long iterations = config.iterations.value_or(static_cast<long long>(
      std::ceil(50.0 * n * std::sqrt(static_cast<double>(s)))));
  if (iterations < 1) throw ConfigError("ERM needs at least one iteration");
  const double scale = bounds.diameter(s) / bounds.lipschitz(s);

  auto evaluate = [&](const MultiplierVector& pi, Vector& gradient) {
    double total = 0.0;
    gradient.setZero();
    for (std::size_t i = 0; i < sample.size(); ++i) {
      const DualEval eval =
          AtInstance(i, [&] { return EvaluateDual(pi, sample[i]); });
      total += eval.value;
      gradient += eval.subgradient;
    }
    gradient /= n;
    return total / n;
  };

  MultiplierVector pi = MultiplierVector::Zero(s, bounds.pi_max());
  Vector gradient(s);
  double value = evaluate(pi, gradient);
  MultiplierVector best = pi;
  double best_value = value;
  for (long long t = 1; t <= iterations; ++t) {
    const double step = scale / std::sqrt(static_cast<double>(t));
    pi = MultiplierVector::Project(pi.values() + step * gradient,
                                   bounds.pi_max());
    value = evaluate(pi, gradient);
    if (value > best_value) {
      best_value = value;
      best = pi;
    }
  }
  return {best, LearnerKind::kErm, sample.size(), config.seed, iterations};
}

LearnedMultipliers WarmStartLearn(std::span<const MilpInstance> sample,
                                  const ProblemBounds& bounds,
                                  const DualSolveConfig& config) {
  const int s = CommonDimension(sample);
  Vector sum = Vector::Zero(s);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    sum += AtInstance(i, [&] {
             return MinNormPiStar(sample[i], bounds, config).pi;
           }).values();
  }
  return {MultiplierVector::Project(sum / static_cast<double>(sample.size()),
                                    bounds.pi_max()),
          LearnerKind::kWarmStart, sample.size(), 0, 0};
}

std::optional<double> RestrictedErmOptimum(std::span<const MilpInstance> sample,
                                           double pi_max) {
  const int s = CommonDimension(sample);
  for (const MilpInstance& instance : sample) {
    if (!instance.is_restricted_form()) return std::nullopt;
  }
  const std::size_t n = sample.size();
  double total = 0.0;
  std::vector<double> costs(n);
  std::vector<double> prefix(n + 1);
  for (int k = 0; k < s; ++k) {
    for (std::size_t i = 0; i < n; ++i) costs[i] = sample[i].c()[k];
    std::sort(costs.begin(), costs.end());
    prefix[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + costs[i];
    // sum_i min(pi/2, c_i - pi/2) = sum_{c_i < pi} c_i + pi (n/2 - #{c_i < pi}).
    auto sum_at = [&](double pk) {
      const auto below = static_cast<std::size_t>(
          std::lower_bound(costs.begin(), costs.end(), pk) - costs.begin());
      return prefix[below] +
             pk * (0.5 * static_cast<double>(n) - static_cast<double>(below));
    };
    double best = std::max(sum_at(0.0), sum_at(pi_max));
    for (double c : costs) best = std::max(best, sum_at(std::clamp(c, 0.0, pi_max)));
    total += best / static_cast<double>(n);
  }
  return total;
}

}  // namespace lagrel
