#ifndef LAGREL_LEARNERS_H_
#define LAGREL_LEARNERS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "lagrel/dual.h"
#include "lagrel/errors.h"
#include "lagrel/instance.h"

namespace lagrel {

enum class LearnerKind { kSga, kErm, kWarmStart };

std::string_view LearnerName(LearnerKind kind);
// Accepts "sga", "erm", "warmstart"; throws ConfigError otherwise.
LearnerKind ParseLearner(std::string_view name);

// Oracle failure on one instance of a stream or sample.
class InstanceError : public Error {
 public:
  InstanceError(std::size_t index, const std::string& what)
      : Error("instance " + std::to_string(index) + ": " + what),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

struct LearnedMultipliers {
  MultiplierVector pi;
  LearnerKind learner = LearnerKind::kSga;
  std::size_t num_instances = 0;
  std::uint64_t seed = 0;
  long long iterations = 0;
};

struct SgaConfig {
  double pi_max = 1.0;
  double violation_bound = 1.0;
  // Defaults to pi_max / (2 B sqrt(N)).
  std::optional<double> step;
  // Recorded in the output; the stream itself carries all randomness.
  std::uint64_t seed = 0;
};

// Stochastic subgradient ascent with averaging: pi_1 = 0,
// pi_{t+1} = Proj(pi_t + eta g_t), output (1/N) sum_{t=1..N} pi_t.
LearnedMultipliers SgaLearn(std::span<const MilpInstance> stream,
                            const SgaConfig& config);

struct ErmConfig {
  // Defaults to ceil(50 N sqrt(s)).
  std::optional<long long> iterations;
  std::uint64_t seed = 0;
};

// Maximizes the sample-average dual value by projected subgradient ascent
// with step D / (L sqrt(t)), keeping the best iterate (origin included).
LearnedMultipliers ErmLearn(std::span<const MilpInstance> sample,
                            const ProblemBounds& bounds,
                            const ErmConfig& config = {});

// Sample mean of per-instance minimum-norm optimal multipliers.
LearnedMultipliers WarmStartLearn(std::span<const MilpInstance> sample,
                                  const ProblemBounds& bounds,
                                  const DualSolveConfig& config = {});

// (1/N) sum_i u(pi, P_i), summed in sample order.
double EmpiricalDualValue(std::span<const MilpInstance> sample,
                          const MultiplierVector& pi);

// Exact maximum of the sample-average dual value over [0, pi_max]^s when
// every instance is in restricted form (concave piecewise-linear per
// coordinate, so a kink or box edge attains it). Empty otherwise.
std::optional<double> RestrictedErmOptimum(std::span<const MilpInstance> sample,
                                           double pi_max);

}  // namespace lagrel

#endif  // LAGREL_LEARNERS_H_
