// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstdint>
#include <random>

namespace cflab {

/// mt19937_64 is fully specified, so draws are reproducible across standard
/// libraries; the distributions in <random> are not, hence the plain modulo.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }
  bool coin() { return (gen_() >> 63) != 0; }

 private:
  std::mt19937_64 gen_;
};

inline constexpr std::uint64_t kDefaultSeed = 24301;  // 0x5EED

}  // namespace cflab
