#ifndef LAGREL_SRC_BINARY_ENUMERATION_H_
#define LAGREL_SRC_BINARY_ENUMERATION_H_

#include <cstdint>
#include <vector>

#include "lagrel/instance.h"

namespace lagrel::internal {

// Feasibility slack for Cx >= d.
inline constexpr double kFeasibilityTol = 1e-9;

inline std::vector<int> MaskToVector(std::uint32_t mask, int p) {
  std::vector<int> x(p);
  for (int j = 0; j < p; ++j) x[j] = (mask >> j) & 1u;
  return x;
}

inline Vector MaskToPoint(std::uint32_t mask, int p) {
  Vector x(p);
  for (int j = 0; j < p; ++j) x[j] = static_cast<double>((mask >> j) & 1u);
  return x;
}

// Calls fn(mask, x) for every x in {0,1}^p with Cx >= d, in increasing mask
// order. Bit j of mask is x_j. Caller guarantees m == 0 and p <= 31.
template <typename Fn>
void ForEachFeasibleBinary(const MilpInstance& instance, Fn&& fn) {
  const int p = instance.num_binary();
  const std::uint64_t count = std::uint64_t{1} << p;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto mask = static_cast<std::uint32_t>(i);
    const Vector x = MaskToPoint(mask, p);
    if (instance.num_kept() > 0) {
      const Vector slack = instance.C() * x - instance.d();
      if (slack.minCoeff() < -kFeasibilityTol) continue;
    }
    fn(mask, x);
  }
}

}  // namespace lagrel::internal

#endif  // LAGREL_SRC_BINARY_ENUMERATION_H_
