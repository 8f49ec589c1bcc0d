#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace pqsparse {

/// Splittable seeded randomness. Every consumer derives an independent
/// substream from (master seed, stream name, index), so datasets and
/// experiments are reproducible no matter how work is parallelized or
/// reordered. Distributions are hand-rolled on top of mt19937_64 because
/// std::uniform_real_distribution is not bit-portable across standard
/// library implementations.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::string_view stream_name, std::uint64_t index);

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform double in [0, 1).
  double uniform01();
  /// Standard normal via Box-Muller (pairs cached).
  double normal();
  /// Unbiased uniform integer in [0, n), n >= 1.
  std::uint64_t uniform_int(std::uint64_t n);

  /// The derived substream seed (recorded in Signal::seed_trace).
  std::uint64_t substream_seed() const { return substream_seed_; }

 private:
  std::uint64_t substream_seed_;
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

/// FNV-1a 64-bit hash; also used for config fingerprints.
std::uint64_t fnv1a64(std::string_view bytes);

/// SplitMix64 mixing step.
std::uint64_t splitmix64(std::uint64_t x);

/// Substream seed derivation used by RandomStream; exposed for tests.
std::uint64_t derive_substream_seed(std::uint64_t master_seed, std::string_view stream_name,
                                    std::uint64_t index);

}  // namespace pqsparse
