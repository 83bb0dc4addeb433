#pragma once

#include "trslab/types.hpp"

namespace trs {

/// Deterministic 64-bit generator (SplitMix64) with Box-Muller normal
/// sampling. Identical (seed, stream) pairs produce identical output on
/// every platform. Use one stream per worker, derived from a master seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01();
  /// Standard normal via Box-Muller; pairs are cached.
  double normal();
  Vector normal_vector(Index n);

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace trs
