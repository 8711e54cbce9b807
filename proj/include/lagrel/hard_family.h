#ifndef LAGREL_HARD_FAMILY_H_
#define LAGREL_HARD_FAMILY_H_

#include <vector>

#include "lagrel/instance.h"
#include "lagrel/seeding.h"

namespace lagrel {

enum class FamilyVariant {
  // c_k in {mu, mu + sigma}: lower bound for learning the multipliers.
  kDualLowerBound,
  // c_k in {1, 2}: lower bound for learning a warm start.
  kWarmStartLowerBound,
};

// Product distribution D_v over restricted-form instances. Coordinate k takes
// its high value with probability (1 + eps)/2 if v_k = 1 and (1 - eps)/2 if
// v_k = 0, independently across k.
class HardFamilySpec {
 public:
  // Throws DomainError unless eps in [0, 1/2), v binary and nonempty,
  // mu, sigma > 0 with mu + sigma < pi_max (dual variant), or pi_max >= 2
  // (warm-start variant, whose mu and sigma are fixed to 1).
  HardFamilySpec(FamilyVariant variant, std::vector<int> v, double epsilon,
                 double pi_max, double mu = 1.0, double sigma = 1.0);

  FamilyVariant variant() const { return variant_; }
  int dimension() const { return static_cast<int>(v_.size()); }
  const std::vector<int>& v() const { return v_; }
  double epsilon() const { return epsilon_; }
  double pi_max() const { return pi_max_; }
  double mu() const { return mu_; }
  double sigma() const { return sigma_; }

  double low_value() const { return mu_; }
  double high_value() const { return mu_ + sigma_; }
  // P(c_k = high_value()).
  double high_probability(int k) const;

 private:
  FamilyVariant variant_;
  std::vector<int> v_;
  double epsilon_;
  double pi_max_;
  double mu_;
  double sigma_;
};

// One draw of c ~ D_v.
Vector SampleCosts(const HardFamilySpec& spec, Rng& rng);
MilpInstance SampleInstance(const HardFamilySpec& spec, Rng& rng);

// J_k(pi_k) = E[min(pi_k/2, c_k - pi_k/2)] in closed form.
double CoordinateRisk(const HardFamilySpec& spec, int k, double pi_k);
// R(pi) = sum_k J_k(pi_k). Dual variant only; pi must lie in the box.
double PopulationRisk(const HardFamilySpec& spec, const MultiplierVector& pi);

// mu 1 + sigma v. Throws DomainError for eps = 0 (flat maximizer set) or the
// warm-start variant.
MultiplierVector OptimalMultiplier(const HardFamilySpec& spec);

struct SharpnessGap {
  // R(pi*) - R(pi).
  double risk_gap = 0.0;
  // (eps / 2) ||pi* - pi||_1.
  double l1_term = 0.0;
};
SharpnessGap ComputeSharpnessGap(const HardFamilySpec& spec,
                                 const MultiplierVector& pi);

// phi* = E[c], the optimal warm start when pi*(P) = c.
Vector MeanCosts(const HardFamilySpec& spec);
// sum_k Var(c_k).
double TotalCostVariance(const HardFamilySpec& spec);
// ||phi - phi*||^2, the exact warm-start excess risk.
double WarmStartExcessRisk(const HardFamilySpec& spec, const Vector& phi);

}  // namespace lagrel

#endif  // LAGREL_HARD_FAMILY_H_
