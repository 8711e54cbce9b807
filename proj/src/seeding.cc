#include "lagrel/seeding.h"

#include <cmath>

#include "lagrel/errors.h"

namespace lagrel {

BernoulliThreshold::BernoulliThreshold(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("Bernoulli probability outside [0, 1]");
  }
  if (p == 1.0) {
    always_ = true;
    return;
  }
  // p < 1 so p * 2^64 < 2^64; the conversion is exact for the scaled value.
  threshold_ = static_cast<std::uint64_t>(std::ldexp(p, 64));
}

}  // namespace lagrel
