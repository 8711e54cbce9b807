#include "lagrel/packing.h"

#include <bit>
#include <cmath>
#include <string>

#include "lagrel/errors.h"

namespace lagrel {
namespace {

// All s-bit masks of popcount exactly r, via Gosper's hack.
std::vector<std::uint32_t> Sphere(int s, int r) {
  std::vector<std::uint32_t> out;
  if (r == 0) return {0u};
  if (r > s) return out;
  const std::uint64_t limit = std::uint64_t{1} << s;
  std::uint64_t mask = (std::uint64_t{1} << r) - 1;
  while (mask < limit) {
    out.push_back(static_cast<std::uint32_t>(mask));
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return out;
}

}  // namespace

std::vector<int> PackingSet::Codeword(std::size_t i) const {
  std::vector<int> v(dimension);
  for (int k = 0; k < dimension; ++k) {
    v[k] = static_cast<int>((codewords[i] >> (dimension - 1 - k)) & 1u);
  }
  return v;
}

int HammingDistance(std::uint32_t a, std::uint32_t b) {
  return std::popcount(a ^ b);
}

PackingSet VgPacking(int s) {
  if (s < 8 || s > 24) {
    throw UnsupportedError("VG packing supports 8 <= s <= 24, got " +
                           std::to_string(s));
  }
  PackingSet set;
  set.dimension = s;
  set.target_distance = (s + 7) / 8;

  // Kept iff outside every kept codeword's radius-(d-1) ball.
  std::vector<std::uint32_t> ball;
  for (int r = 0; r < set.target_distance; ++r) {
    const auto sphere = Sphere(s, r);
    ball.insert(ball.end(), sphere.begin(), sphere.end());
  }
  const std::uint64_t count = std::uint64_t{1} << s;
  std::vector<bool> covered(count, false);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (covered[i]) continue;
    const auto word = static_cast<std::uint32_t>(i);
    set.codewords.push_back(word);
    for (std::uint32_t offset : ball) covered[word ^ offset] = true;
  }

  const std::size_t required = std::size_t{1} << set.target_distance;
  if (set.codewords.size() < required) {
    throw Error("greedy packing produced " +
                std::to_string(set.codewords.size()) + " < 2^" +
                std::to_string(set.target_distance) + " codewords");
  }
  set.min_hamming =
      MinPairwiseDistance(set.codewords, s).value_or(set.target_distance);
  return set;
}

std::optional<int> MinPairwiseDistance(std::span<const std::uint32_t> codewords,
                                       int s) {
  if (codewords.size() < 2) return std::nullopt;
  std::vector<bool> member(std::size_t{1} << s, false);
  for (std::uint32_t w : codewords) {
    if (member[w]) return 0;
    member[w] = true;
  }
  for (int r = 1; r <= s; ++r) {
    const auto sphere = Sphere(s, r);
    for (std::uint32_t w : codewords) {
      for (std::uint32_t offset : sphere) {
        if (member[w ^ offset]) return r;
      }
    }
  }
  return std::nullopt;
}

double BernoulliKl(double p, double q) {
  auto term = [](double a, double b) {
    return a == 0.0 ? 0.0 : a * std::log(a / b);
  };
  return term(p, q) + term(1.0 - p, 1.0 - q);
}

FanoDiagnostics KlAndFano(int s, long long num_samples, double epsilon,
                          std::span<const int> v, std::span<const int> v_prime,
                          double sigma) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw DomainError("epsilon must lie in (0, 1/2)");
  }
  if (s < 1 || num_samples < 1) throw DomainError("need s >= 1 and N >= 1");
  if (static_cast<int>(v.size()) != s || static_cast<int>(v_prime.size()) != s) {
    throw DimensionError("v and v' must have length s");
  }
  FanoDiagnostics out;
  for (int k = 0; k < s; ++k) out.hamming += v[k] != v_prime[k] ? 1 : 0;

  const double p = 0.5 * (1.0 + epsilon);
  const double q = 0.5 * (1.0 - epsilon);
  const auto n = static_cast<double>(num_samples);
  // Each differing coordinate contributes KL(Ber(p) || Ber(q)); the two
  // orientations are equal by symmetry of the pair.
  out.kl_single = out.hamming * BernoulliKl(p, q);
  out.kl_sample = n * out.kl_single;
  out.kl_bound = 4.0 * n * s * epsilon * epsilon;

  if (s > 16) {
    const double eps_star = std::sqrt((s / 16.0 - 1.0) * std::log(2.0) /
                                      (4.0 * n * s));
    out.fano_epsilon = eps_star;
    // With 4Ns eps*^2 at the cap, 1 - (I + ln 2)/ln M >= 1/2.
    out.lower_bound_packing_radius = 0.5 * eps_star * (sigma * s / 16.0) * 0.5;
    out.lower_bound_separation = 0.5 * eps_star * (sigma * s / 8.0) * 0.5;
  }
  return out;
}

}  // namespace lagrel
