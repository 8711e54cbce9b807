#include "lagrel/instance.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "binary_enumeration.h"
#include "lagrel/errors.h"

namespace lagrel {
namespace {

bool AllFinite(const Matrix& m) { return m.array().isFinite().all(); }

std::string Shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

MilpInstance::MilpInstance(Vector c, Matrix A, Vector b, Matrix C, Vector d,
                           int num_continuous, int num_binary)
    : c_(std::move(c)),
      A_(std::move(A)),
      b_(std::move(b)),
      C_(std::move(C)),
      d_(std::move(d)),
      num_continuous_(num_continuous),
      num_binary_(num_binary),
      restricted_(false) {
  if (num_continuous_ < 0 || num_binary_ < 0) {
    throw DimensionError("variable counts must be nonnegative");
  }
  const int n = num_continuous_ + num_binary_;
  if (n < 1) throw DimensionError("instance needs at least one variable");
  if (c_.size() != n) {
    throw DimensionError("c has length " + std::to_string(c_.size()) +
                         ", expected m+p = " + std::to_string(n));
  }
  if (b_.size() < 1) throw DimensionError("at least one coupling row needed");
  if (A_.rows() != b_.size() || A_.cols() != n) {
    throw DimensionError("A is " + Shape(A_) + ", expected " +
                         std::to_string(b_.size()) + "x" + std::to_string(n));
  }
  // An empty kept block may come with any column count (e.g. 0x0 from JSON).
  if (d_.size() == 0 && C_.rows() == 0) {
    C_.resize(0, n);
  }
  if (C_.rows() != d_.size() || C_.cols() != n) {
    throw DimensionError("C is " + Shape(C_) + ", expected " +
                         std::to_string(d_.size()) + "x" + std::to_string(n));
  }
  if (!AllFinite(c_) || !AllFinite(A_) || !AllFinite(b_) || !AllFinite(C_) ||
      !AllFinite(d_)) {
    throw DimensionError("instance data must be finite");
  }
  const int s = num_coupling();
  restricted_ = num_continuous_ == 0 && num_binary_ == s && d_.size() == 0 &&
                A_.isIdentity(0.0) && (b_.array() == 0.5).all();
}

ProblemBounds::ProblemBounds(double violation_bound, double pi_max)
    : violation_bound_(violation_bound), pi_max_(pi_max) {
  if (!(violation_bound > 0.0) || !std::isfinite(violation_bound)) {
    throw DomainError("violation bound B must be positive");
  }
  if (!(pi_max > 0.0) || !std::isfinite(pi_max)) {
    throw DomainError("pi_max must be positive");
  }
}

double ProblemBounds::lipschitz(int s) const {
  return 2.0 * violation_bound_ * std::sqrt(static_cast<double>(s));
}

double ProblemBounds::diameter(int s) const {
  return pi_max_ * std::sqrt(static_cast<double>(s));
}

MultiplierVector::MultiplierVector(Vector values, double pi_max)
    : values_(std::move(values)), pi_max_(pi_max) {
  if (!(pi_max > 0.0) || !std::isfinite(pi_max)) {
    throw DomainError("pi_max must be positive");
  }
  for (Eigen::Index k = 0; k < values_.size(); ++k) {
    const double v = values_[k];
    if (!std::isfinite(v) || v < 0.0 || v > pi_max_) {
      throw DomainError("multiplier " + std::to_string(k) + " = " +
                        std::to_string(v) + " outside [0, " +
                        std::to_string(pi_max_) + "]");
    }
  }
}

MultiplierVector MultiplierVector::Zero(int s, double pi_max) {
  return MultiplierVector(Vector::Zero(s), pi_max);
}

MultiplierVector MultiplierVector::Project(const Vector& point, double pi_max) {
  return MultiplierVector(point.cwiseMax(0.0).cwiseMin(pi_max), pi_max);
}

MilpInstance MakeRestrictedInstance(const Vector& c) {
  const Eigen::Index s = c.size();
  if (s < 1) throw DimensionError("restricted instance needs s >= 1");
  return MilpInstance(c, Matrix::Identity(s, s), Vector::Constant(s, 0.5),
                      Matrix(0, s), Vector(0), /*num_continuous=*/0,
                      /*num_binary=*/static_cast<int>(s));
}

BoundsReport ValidateBounds(const MilpInstance& instance,
                            const ProblemBounds& bounds,
                            int enumeration_limit) {
  if (instance.num_continuous() > 0) {
    throw UnsupportedError(
        "bounds check enumerates binaries; continuous variables unsupported");
  }
  if (instance.num_binary() > enumeration_limit) {
    throw UnsupportedError("p = " + std::to_string(instance.num_binary()) +
                           " exceeds enumeration limit " +
                           std::to_string(enumeration_limit));
  }
  const double B = bounds.violation_bound();
  const int s = instance.num_coupling();
  BoundsReport report;

  Vector per_row = instance.b().cwiseAbs();
  report.max_abs_b = per_row.maxCoeff();

  Vector worst_ax = Vector::Zero(s);
  std::optional<std::uint32_t> witness_mask;
  internal::ForEachFeasibleBinary(
      instance, [&](std::uint32_t mask, const Vector& x) {
        ++report.feasible_points;
        const Vector ax = (instance.A() * x).cwiseAbs();
        worst_ax = worst_ax.cwiseMax(ax);
        if (!witness_mask && ax.maxCoeff() > B) witness_mask = mask;
      });
  report.max_abs_ax = s > 0 ? worst_ax.maxCoeff() : 0.0;
  per_row = per_row.cwiseMax(worst_ax);
  per_row.maxCoeff(&report.tightest_coordinate);

  report.passed = report.max_abs_b <= B && !witness_mask;
  if (witness_mask) {
    report.witness = internal::MaskToVector(*witness_mask,
                                            instance.num_binary());
  }
  return report;
}

}  // namespace lagrel
