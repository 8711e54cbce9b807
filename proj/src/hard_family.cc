#include "lagrel/hard_family.h"

#include <cmath>
#include <string>

#include "lagrel/errors.h"

namespace lagrel {

HardFamilySpec::HardFamilySpec(FamilyVariant variant, std::vector<int> v,
                               double epsilon, double pi_max, double mu,
                               double sigma)
    : variant_(variant),
      v_(std::move(v)),
      epsilon_(epsilon),
      pi_max_(pi_max),
      mu_(mu),
      sigma_(sigma) {
  if (v_.empty()) throw DomainError("family needs s >= 1");
  for (int bit : v_) {
    if (bit != 0 && bit != 1) throw DomainError("v must be binary");
  }
  if (!(epsilon_ >= 0.0 && epsilon_ < 0.5)) {
    throw DomainError("epsilon must lie in [0, 1/2)");
  }
  if (variant_ == FamilyVariant::kWarmStartLowerBound) {
    mu_ = 1.0;
    sigma_ = 1.0;
    if (!(pi_max_ >= 2.0)) {
      throw DomainError("warm-start family needs pi_max >= 2");
    }
    return;
  }
  if (!(mu_ > 0.0) || !(sigma_ > 0.0)) {
    throw DomainError("mu and sigma must be positive");
  }
  if (!(mu_ + sigma_ < pi_max_)) {
    throw DomainError("need mu + sigma < pi_max");
  }
}

double HardFamilySpec::high_probability(int k) const {
  return v_[k] == 1 ? 0.5 * (1.0 + epsilon_) : 0.5 * (1.0 - epsilon_);
}

Vector SampleCosts(const HardFamilySpec& spec, Rng& rng) {
  const int s = spec.dimension();
  Vector c(s);
  const BernoulliThreshold up(0.5 * (1.0 + spec.epsilon()));
  const BernoulliThreshold down(0.5 * (1.0 - spec.epsilon()));
  for (int k = 0; k < s; ++k) {
    const bool high = spec.v()[k] == 1 ? up(rng) : down(rng);
    c[k] = high ? spec.high_value() : spec.low_value();
  }
  return c;
}

MilpInstance SampleInstance(const HardFamilySpec& spec, Rng& rng) {
  return MakeRestrictedInstance(SampleCosts(spec, rng));
}

double CoordinateRisk(const HardFamilySpec& spec, int k, double pi_k) {
  const double p = spec.high_probability(k);
  const double mu = spec.low_value();
  const double top = spec.high_value();
  if (pi_k <= mu) return 0.5 * pi_k;
  if (pi_k <= top) return p * 0.5 * pi_k + (1.0 - p) * (mu - 0.5 * pi_k);
  return p * (top - 0.5 * pi_k) + (1.0 - p) * (mu - 0.5 * pi_k);
}

namespace {

void CheckDualVariant(const HardFamilySpec& spec) {
  if (spec.variant() != FamilyVariant::kDualLowerBound) {
    throw DomainError("operation defined for the dual lower-bound family only");
  }
}

void CheckMultipliers(const HardFamilySpec& spec, const MultiplierVector& pi) {
  if (pi.size() != spec.dimension()) {
    throw DimensionError("multiplier length does not match family dimension");
  }
  if (pi.pi_max() > spec.pi_max()) {
    for (int k = 0; k < pi.size(); ++k) {
      if (pi[k] > spec.pi_max()) {
        throw DomainError("multiplier " + std::to_string(k) +
                          " outside the family box");
      }
    }
  }
}

}  // namespace

double PopulationRisk(const HardFamilySpec& spec, const MultiplierVector& pi) {
  CheckDualVariant(spec);
  CheckMultipliers(spec, pi);
  double total = 0.0;
  for (int k = 0; k < spec.dimension(); ++k) {
    total += CoordinateRisk(spec, k, pi[k]);
  }
  return total;
}

MultiplierVector OptimalMultiplier(const HardFamilySpec& spec) {
  CheckDualVariant(spec);
  if (spec.epsilon() == 0.0) {
    throw DomainError(
        "eps = 0 makes the risk flat on [mu, mu + sigma]; no unique maximizer");
  }
  Vector pi(spec.dimension());
  for (int k = 0; k < spec.dimension(); ++k) {
    pi[k] = spec.mu() + spec.sigma() * spec.v()[k];
  }
  return MultiplierVector(std::move(pi), spec.pi_max());
}

SharpnessGap ComputeSharpnessGap(const HardFamilySpec& spec,
                                 const MultiplierVector& pi) {
  const MultiplierVector best = OptimalMultiplier(spec);
  return {PopulationRisk(spec, best) - PopulationRisk(spec, pi),
          0.5 * spec.epsilon() * (best.values() - pi.values()).lpNorm<1>()};
}

Vector MeanCosts(const HardFamilySpec& spec) {
  Vector mean(spec.dimension());
  for (int k = 0; k < spec.dimension(); ++k) {
    mean[k] = spec.low_value() + spec.high_probability(k) * spec.sigma();
  }
  return mean;
}

double TotalCostVariance(const HardFamilySpec& spec) {
  double total = 0.0;
  for (int k = 0; k < spec.dimension(); ++k) {
    const double p = spec.high_probability(k);
    total += spec.sigma() * spec.sigma() * p * (1.0 - p);
  }
  return total;
}

double WarmStartExcessRisk(const HardFamilySpec& spec, const Vector& phi) {
  if (phi.size() != spec.dimension()) {
    throw DimensionError("warm start length does not match family dimension");
  }
  return (phi - MeanCosts(spec)).squaredNorm();
}

}  // namespace lagrel
