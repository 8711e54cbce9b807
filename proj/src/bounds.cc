#include "lagrel/bounds.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "lagrel/dual.h"
#include "lagrel/errors.h"
#include "lagrel/seeding.h"

namespace lagrel {
namespace {

void CheckCommon(int s, double violation_bound, double pi_max) {
  if (s < 1) throw DomainError("s must be >= 1");
  if (!(violation_bound > 0.0) || !(pi_max > 0.0)) {
    throw DomainError("B and pi_max must be positive");
  }
}

void CheckSamples(long long num_samples) {
  if (num_samples < 1) throw DomainError("N must be >= 1");
}

}  // namespace

double DudleyConstant() { return 3.0 * std::sqrt(std::numbers::pi); }

double CoveringBound(int s, double violation_bound, double pi_max,
                     double delta) {
  CheckCommon(s, violation_bound, pi_max);
  if (!(delta > 0.0)) throw DomainError("delta must be positive");
  return s * std::log1p(2.0 * violation_bound * pi_max * s / delta);
}

double DudleyBound(int s, double violation_bound, double pi_max,
                   long long num_samples) {
  CheckCommon(s, violation_bound, pi_max);
  CheckSamples(num_samples);
  return DudleyConstant() * violation_bound * pi_max *
         std::pow(static_cast<double>(s), 1.5) /
         std::sqrt(static_cast<double>(num_samples));
}

double SgaBound(int s, double violation_bound, double pi_max,
                long long num_samples) {
  CheckCommon(s, violation_bound, pi_max);
  CheckSamples(num_samples);
  return 2.0 * violation_bound * pi_max * s /
         std::sqrt(static_cast<double>(num_samples));
}

double WarmStartBound(int s, double pi_max, long long num_samples) {
  CheckCommon(s, 1.0, pi_max);
  CheckSamples(num_samples);
  return s * pi_max * pi_max / (4.0 * static_cast<double>(num_samples));
}

BoundReport MakeBoundReport(int s, long long num_samples,
                            double violation_bound, double pi_max,
                            double delta) {
  BoundReport r;
  r.s = s;
  r.num_samples = num_samples;
  r.violation_bound = violation_bound;
  r.pi_max = pi_max;
  r.delta = delta;
  r.covering_log = CoveringBound(s, violation_bound, pi_max, delta);
  r.dudley_bound = DudleyBound(s, violation_bound, pi_max, num_samples);
  r.sga_bound = SgaBound(s, violation_bound, pi_max, num_samples);
  r.erm_excess_bound = 2.0 * r.dudley_bound;
  r.warmstart_bound = WarmStartBound(s, pi_max, num_samples);
  r.dudley_constant = DudleyConstant();
  return r;
}

RademacherEstimate EmpiricalRademacher(std::span<const MilpInstance> sample,
                                       const ProblemBounds& bounds,
                                       int grid_points_per_dim, int draws,
                                       std::uint64_t seed) {
  if (sample.empty()) throw DomainError("empty sample");
  const int s = sample.front().num_coupling();
  if (s > 3) {
    throw UnsupportedError("grid estimator limited to s <= 3, got " +
                           std::to_string(s));
  }
  if (grid_points_per_dim < 2) throw DomainError("need G >= 2");
  if (draws < 100) throw DomainError("need at least 100 Monte Carlo draws");

  const int g = grid_points_per_dim;
  int grid_size = 1;
  for (int k = 0; k < s; ++k) grid_size *= g;
  const std::size_t n = sample.size();
  const double spacing = bounds.pi_max() / (g - 1);

  // values(j, i) = u(pi_j, P_i).
  Matrix values(grid_size, static_cast<Eigen::Index>(n));
  Vector point(s);
  for (int j = 0; j < grid_size; ++j) {
    int rest = j;
    for (int k = 0; k < s; ++k) {
      point[k] = spacing * (rest % g);
      rest /= g;
    }
    const MultiplierVector pi = MultiplierVector::Project(point, bounds.pi_max());
    for (std::size_t i = 0; i < n; ++i) {
      values(j, static_cast<Eigen::Index>(i)) =
          EvaluateDual(pi, sample[i]).value;
    }
  }

  Rng rng(seed);
  Vector signs(static_cast<Eigen::Index>(n));
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int t = 0; t < draws; ++t) {
    for (Eigen::Index i = 0; i < signs.size(); ++i) {
      signs[i] = (rng() >> 63) != 0 ? 1.0 : -1.0;
    }
    const double sup = (values * signs).maxCoeff() / static_cast<double>(n);
    sum += sup;
    sum_sq += sup * sup;
  }
  RademacherEstimate out;
  out.grid_estimate = sum / draws;
  const double variance =
      std::max(0.0, (sum_sq - draws * out.grid_estimate * out.grid_estimate) /
                        (draws - 1));
  out.standard_error = std::sqrt(variance / draws);
  out.grid_correction = bounds.lipschitz(s) * bounds.diameter(s) / g;
  out.estimate = out.grid_estimate + out.grid_correction;
  return out;
}

}  // namespace lagrel
