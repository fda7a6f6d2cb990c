// Copyright 2026 The intorder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Counter-based random streams.
//
// A stream is a 64-bit key; draw k (k = 1, 2, ...) is mix64(key + k * gamma),
// which is the SplitMix64 sequence started at `key`. Substreams are keyed by
// deriveKey(parent, index), so a replicate or permutation index maps to its
// stream without touching any shared state. Every distribution below is
// implemented here rather than taken from <random>, whose algorithms are
// implementation-defined; outputs are therefore stable across toolchains.
//
//   uniform01        (bits >> 11) * 2^-53, in [0, 1)
//   uniformOpen01    ((bits >> 11) + 1) * 2^-53, in (0, 1]
//   boundedIndex     Lemire's multiply-shift with rejection, unbiased
//   standardNormals  Box-Muller, one pair per two uniforms

#ifndef INTORDER_RNG_HPP
#define INTORDER_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace intorder {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Key of substream `index` under `parent`.
constexpr std::uint64_t deriveKey(std::uint64_t parent,
                                  std::uint64_t index) noexcept {
  return mix64(parent ^ mix64(index + kGoldenGamma));
}

class CounterRng {
 public:
  using result_type = std::uint64_t;

  constexpr explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() noexcept {
    return mix64(key_ + (++counter_) * kGoldenGamma);
  }

  constexpr CounterRng substream(std::uint64_t index) const noexcept {
    return CounterRng(deriveKey(key_, index));
  }

  constexpr std::uint64_t key() const noexcept { return key_; }
  constexpr std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

inline double uniform01(CounterRng& rng) noexcept {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniformOpen01(CounterRng& rng) noexcept {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

/// Uniform integer in [0, bound); bound must be positive.
inline std::uint64_t boundedIndex(CounterRng& rng,
                                  std::uint64_t bound) noexcept {
  std::uint64_t x = rng();
  unsigned __int128 product = static_cast<unsigned __int128>(x) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = rng();
      product = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

inline std::array<double, 2> standardNormals(CounterRng& rng) noexcept {
  const double radius = std::sqrt(-2.0 * std::log(uniformOpen01(rng)));
  const double angle = 2.0 * std::numbers::pi * uniform01(rng);
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace intorder

#endif  // INTORDER_RNG_HPP
