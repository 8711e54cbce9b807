#ifndef LAGREL_INSTANCE_H_
#define LAGREL_INSTANCE_H_

#include <optional>
#include <vector>

#include <Eigen/Core>

namespace lagrel {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// A MILP instance in inequality form
//
//   min c'x  s.t.  x in R_+^m x {0,1}^p,  Ax >= b (coupling),  Cx >= d (kept).
//
// The first m columns are continuous, the last p are binary. The s rows of A
// are the ones dualized by the Lagrangian relaxation. Instances are validated
// on construction and immutable afterwards.
class MilpInstance {
 public:
  // Throws DimensionError on inconsistent shapes, s == 0, m + p == 0, or any
  // non-finite entry.
  MilpInstance(Vector c, Matrix A, Vector b, Matrix C, Vector d,
               int num_continuous, int num_binary);

  const Vector& c() const { return c_; }
  const Matrix& A() const { return A_; }
  const Vector& b() const { return b_; }
  const Matrix& C() const { return C_; }
  const Vector& d() const { return d_; }

  int num_continuous() const { return num_continuous_; }
  int num_binary() const { return num_binary_; }
  int num_vars() const { return num_continuous_ + num_binary_; }
  int num_coupling() const { return static_cast<int>(b_.size()); }
  int num_kept() const { return static_cast<int>(d_.size()); }

  // True for (c, I_s, 1/2 * 1_s, empty, empty) with m = 0, p = s.
  bool is_restricted_form() const { return restricted_; }

 private:
  Vector c_;
  Matrix A_;
  Vector b_;
  Matrix C_;
  Vector d_;
  int num_continuous_;
  int num_binary_;
  bool restricted_;
};

// Constants of the bounded-violation and box assumptions.
class ProblemBounds {
 public:
  // Throws DomainError unless both are positive and finite.
  ProblemBounds(double violation_bound, double pi_max);

  double violation_bound() const { return violation_bound_; }
  double pi_max() const { return pi_max_; }

  // L = 2 B sqrt(s): Lipschitz constant of u(., P) and bound on ||g||_2.
  double lipschitz(int s) const;
  // D = pi_max sqrt(s): l2 diameter of the box.
  double diameter(int s) const;

 private:
  double violation_bound_;
  double pi_max_;
};

// A point of the box [0, pi_max]^s.
class MultiplierVector {
 public:
  // Throws DomainError if any entry is outside [0, pi_max] or not finite.
  MultiplierVector(Vector values, double pi_max);

  static MultiplierVector Zero(int s, double pi_max);
  // Euclidean projection onto the box, i.e. coordinate-wise clipping.
  static MultiplierVector Project(const Vector& point, double pi_max);

  const Vector& values() const { return values_; }
  double pi_max() const { return pi_max_; }
  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int k) const { return values_[k]; }

 private:
  Vector values_;
  double pi_max_;
};

// min c'x over x in {0,1}^s s.t. x_k >= 1/2, i.e. P = (c, I_s, 1/2 1_s, -, -).
MilpInstance MakeRestrictedInstance(const Vector& c);

struct BoundsReport {
  bool passed = false;
  // Coordinate k attaining the largest max(|b_k|, |(Ax)_k|).
  int tightest_coordinate = 0;
  double max_abs_b = 0.0;
  double max_abs_ax = 0.0;
  // Number of points x with Cx >= d that were enumerated.
  long long feasible_points = 0;
  // Set when the check failed because of some x (not b alone).
  std::optional<std::vector<int>> witness;
};

// Enumerates every binary x with Cx >= d and checks |b_k| <= B and
// |(Ax)_k| <= B. Requires m == 0 and p <= enumeration_limit, otherwise
// UnsupportedError.
BoundsReport ValidateBounds(const MilpInstance& instance,
                            const ProblemBounds& bounds,
                            int enumeration_limit = 24);

}  // namespace lagrel

#endif  // LAGREL_INSTANCE_H_
