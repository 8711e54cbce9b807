#include "lagrel/subproblem.h"

#include <cstdint>
#include <limits>
#include <string>

#include "binary_enumeration.h"
#include "lagrel/errors.h"

namespace lagrel {
namespace {

void CheckEnumerable(const MilpInstance& instance, int enumeration_limit) {
  if (instance.num_continuous() > 0) {
    throw UnsupportedError(
        "enumeration oracle does not handle continuous variables (m > 0)");
  }
  if (instance.num_binary() > enumeration_limit || instance.num_binary() > 30) {
    throw UnsupportedError("p = " + std::to_string(instance.num_binary()) +
                           " exceeds enumeration limit " +
                           std::to_string(enumeration_limit));
  }
}

// Sum of the selected columns of `m`.
void AccumulateColumns(const Matrix& m, std::uint32_t mask, Vector& out) {
  out.setZero();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if ((mask >> j) & 1u) out += m.col(j);
  }
}

double SelectedSum(const Vector& weights, std::uint32_t mask) {
  double total = 0.0;
  for (Eigen::Index j = 0; j < weights.size(); ++j) {
    if ((mask >> j) & 1u) total += weights[j];
  }
  return total;
}

bool Satisfies(const Vector& lhs, const Vector& rhs) {
  for (Eigen::Index k = 0; k < rhs.size(); ++k) {
    if (lhs[k] < rhs[k] - internal::kFeasibilityTol) return false;
  }
  return true;
}

SubproblemSolution SolveRestricted(const MultiplierVector& pi,
                                   const MilpInstance& instance) {
  const int s = instance.num_coupling();
  SubproblemSolution out;
  out.x_star = Vector::Zero(s);
  for (int k = 0; k < s; ++k) {
    const double ck = instance.c()[k];
    const double pk = pi[k];
    if (ck - pk < 0.0) {
      out.x_star[k] = 1.0;
      out.value += ck - 0.5 * pk;
    } else {
      out.value += 0.5 * pk;
    }
  }
  return out;
}

}  // namespace

SubproblemSolution SolveSubproblem(const MultiplierVector& pi,
                                   const MilpInstance& instance,
                                   int enumeration_limit) {
  if (pi.size() != instance.num_coupling()) {
    throw DimensionError("multiplier length " + std::to_string(pi.size()) +
                         " != s = " + std::to_string(instance.num_coupling()));
  }
  if (instance.is_restricted_form()) return SolveRestricted(pi, instance);
  CheckEnumerable(instance, enumeration_limit);

  const Vector& pv = pi.values();
  const Vector reduced = instance.c() - instance.A().transpose() * pv;
  const int p = instance.num_binary();
  const std::uint64_t count = std::uint64_t{1} << p;

  Vector cx(instance.num_kept());
  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto mask = static_cast<std::uint32_t>(i);
    const double value = SelectedSum(reduced, mask);
    if (!(value < best)) continue;
    if (instance.num_kept() > 0) {
      AccumulateColumns(instance.C(), mask, cx);
      if (!Satisfies(cx, instance.d())) continue;
    }
    best = value;
    best_mask = mask;
  }
  if (best == std::numeric_limits<double>::infinity()) {
    throw InfeasibleError("no binary point satisfies Cx >= d");
  }
  SubproblemSolution out;
  out.x_star = internal::MaskToPoint(best_mask, p);
  // Recompute from the primal form so value and x* agree exactly.
  out.value = instance.c().dot(out.x_star) +
              pv.dot(instance.b() - instance.A() * out.x_star);
  return out;
}

OptSolution SolveOptBruteForce(const MilpInstance& instance,
                               int enumeration_limit) {
  CheckEnumerable(instance, enumeration_limit);
  const int p = instance.num_binary();
  const std::uint64_t count = std::uint64_t{1} << p;
  Vector ax(instance.num_coupling());
  Vector cx(instance.num_kept());
  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto mask = static_cast<std::uint32_t>(i);
    const double value = SelectedSum(instance.c(), mask);
    if (!(value < best)) continue;
    AccumulateColumns(instance.A(), mask, ax);
    if (!Satisfies(ax, instance.b())) continue;
    if (instance.num_kept() > 0) {
      AccumulateColumns(instance.C(), mask, cx);
      if (!Satisfies(cx, instance.d())) continue;
    }
    best = value;
    best_mask = mask;
  }
  if (best == std::numeric_limits<double>::infinity()) {
    throw InfeasibleError("OPT(P) undefined: no feasible binary point");
  }
  return {best, internal::MaskToPoint(best_mask, p)};
}

}  // namespace lagrel
