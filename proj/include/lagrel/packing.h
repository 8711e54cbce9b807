#ifndef LAGREL_PACKING_H_
#define LAGREL_PACKING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lagrel {

// Binary codewords of length s stored as bit masks; coordinate k is bit
// s - 1 - k so integer order equals lexicographic order.
struct PackingSet {
  int dimension = 0;
  // ceil(s / 8).
  int target_distance = 0;
  // Smallest pairwise Hamming distance actually achieved.
  int min_hamming = 0;
  std::vector<std::uint32_t> codewords;

  std::size_t size() const { return codewords.size(); }
  std::vector<int> Codeword(std::size_t i) const;
};

int HammingDistance(std::uint32_t a, std::uint32_t b);

// Greedy packing over {0,1}^s in lexicographic order: a vector is kept iff it
// is at distance >= ceil(s/8) from every kept vector. Supports 8 <= s <= 24
// (UnsupportedError otherwise). Throws Error if the result has fewer than
// 2^ceil(s/8) codewords.
PackingSet VgPacking(int s);

// Exact minimum pairwise Hamming distance, found by growing Hamming spheres
// around every codeword. Empty for fewer than two codewords.
std::optional<int> MinPairwiseDistance(std::span<const std::uint32_t> codewords,
                                       int s);

struct FanoDiagnostics {
  int hamming = 0;
  // KL(D_v || D_v') for one instance.
  double kl_single = 0.0;
  // N * kl_single.
  double kl_sample = 0.0;
  // 4 N s eps^2.
  double kl_bound = 0.0;
  // Largest eps with 4 N s eps^2 <= (s/16 - 1) ln 2; empty for s <= 16.
  std::optional<double> fano_epsilon;
  // (fano_epsilon / 2) * delta * 1/2 for delta = sigma s / 16 (packing radius)
  // and delta = sigma s / 8 (pairwise separation).
  std::optional<double> lower_bound_packing_radius;
  std::optional<double> lower_bound_separation;
};

// KL(Ber(p) || Ber(q)) in nats.
double BernoulliKl(double p, double q);

// Exact product-Bernoulli KL between two members of the dual family and the
// Fano plug-in quantities. eps must lie in (0, 1/2).
FanoDiagnostics KlAndFano(int s, long long num_samples, double epsilon,
                          std::span<const int> v, std::span<const int> v_prime,
                          double sigma = 1.0);

}  // namespace lagrel

#endif  // LAGREL_PACKING_H_
