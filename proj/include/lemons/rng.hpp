#pragma once

#include <cstdint>

namespace lemons {

/// Counter-based uniform generator: every variate is a pure function of
/// (seed, stream, index), so draws are independent of iteration order and
/// thread count and a run is reproducible from its seed alone.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  /// Uniform double in [0, 1).
  double uniform(std::uint64_t stream, std::uint64_t index) const {
    return static_cast<double>(word(stream, index) >> 11) * 0x1.0p-53;
  }

  /// True with probability p.
  bool bernoulli(double p, std::uint64_t stream, std::uint64_t index) const {
    return uniform(stream, index) < p;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  // SplitMix64/Murmur3 finalizer; full avalanche per 64-bit word.
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ULL;
    z ^= z >> 33;
    return z;
  }

  std::uint64_t word(std::uint64_t stream, std::uint64_t index) const {
    std::uint64_t h = mix(seed_ + 0x9e3779b97f4a7c15ULL);
    h = mix(h ^ (stream + 0xbf58476d1ce4e5b9ULL));
    h = mix(h ^ (index + 0x94d049bb133111ebULL));
    return h;
  }

  std::uint64_t seed_;
};

}  // namespace lemons
