// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace spdlink {

// Deterministic random source with hand-specified value conversions.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// C++ standard for a given seed. The conversions below are spelled out
// here (rather than delegated to std::*_distribution, whose mappings
// are implementation-defined) so that identical seeds produce identical
// draws on every standard-conforming build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on the open interval (0, 1): ((x >> 11) + 0.5) * 2^-53.
  // Never returns 0 or 1, so log(1 - u) and log(u) are always finite.
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Unit-mean exponential via inverse CDF: -log(1 - u).
  double exponential() { return -std::log1p(-uniform01()); }

 private:
  std::mt19937_64 engine_;
};

// Derives an independent stream seed from a base seed.
// splitmix64 seeded with `base`, advanced `stream + 1` times; the last
// output is returned. Distinct streams give statistically independent
// seeds even when base seeds are consecutive integers.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace spdlink
