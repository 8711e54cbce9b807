#ifndef LAGREL_SEEDING_H_
#define LAGREL_SEEDING_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace lagrel {

// All sampling goes through this engine; its output sequence is fixed by the
// C++ standard, so seeded runs reproduce across platforms.
using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t MixBits(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a over the bytes of a label.
constexpr std::uint64_t HashLabel(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char ch : label) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Folds labels into a master seed: h <- MixBits(h ^ label) left to right.
constexpr std::uint64_t DeriveSeed(std::uint64_t master,
                                   std::initializer_list<std::uint64_t> labels) {
  std::uint64_t h = MixBits(master);
  for (std::uint64_t label : labels) h = MixBits(h ^ label);
  return h;
}

// Bernoulli(p) as a comparison of one uniform 64-bit draw against
// floor(p 2^64); no floating point happens per draw.
class BernoulliThreshold {
 public:
  explicit BernoulliThreshold(double p);
  bool operator()(Rng& rng) const { return always_ || rng() < threshold_; }

 private:
  std::uint64_t threshold_ = 0;
  bool always_ = false;
};

}  // namespace lagrel

#endif  // LAGREL_SEEDING_H_
