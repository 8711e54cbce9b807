#ifndef LAGREL_SUBPROBLEM_H_
#define LAGREL_SUBPROBLEM_H_

#include "lagrel/instance.h"

namespace lagrel {

// Largest p the enumeration oracles accept by default (2^24 points).
inline constexpr int kDefaultEnumerationLimit = 24;

struct SubproblemSolution {
  Vector x_star;
  // c'x* + pi'(b - A x*).
  double value = 0.0;
};

// Exact Lagrangian subproblem
//
//   u(pi, P) = min { c'x + pi'(b - Ax) : x in {0,1}^p, Cx >= d }.
//
// Restricted-form instances take a closed-form per-coordinate path
// (x_k = 1 iff c_k - pi_k < 0). Everything else is enumerated; that path
// needs m == 0 and p <= enumeration_limit (UnsupportedError otherwise) and
// throws InfeasibleError when no x satisfies Cx >= d. Ties keep the first
// minimizer in increasing bit-mask order.
SubproblemSolution SolveSubproblem(
    const MultiplierVector& pi, const MilpInstance& instance,
    int enumeration_limit = kDefaultEnumerationLimit);

struct OptSolution {
  double value = 0.0;
  Vector x_star;
};

// OPT(P) by enumeration of all binary x with Ax >= b and Cx >= d.
OptSolution SolveOptBruteForce(
    const MilpInstance& instance,
    int enumeration_limit = kDefaultEnumerationLimit);

}  // namespace lagrel

#endif  // LAGREL_SUBPROBLEM_H_
