// SPDX-License-Identifier: Apache-2.0
#include "spdlink/rng.hpp"

namespace spdlink {
namespace {

// splitmix64 step (Vigna's reference constants).
std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t state = base;
  std::uint64_t out = 0;
  for (std::uint64_t i = 0; i <= stream; ++i) {
    out = splitmix64_next(state);
  }
  return out;
}

}  // namespace spdlink
