// Copyright 2026 The qcomplexity authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCX_RNG_HPP_
#define QCX_RNG_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace qcx {

/// SplitMix64 finalizer. Used for seed derivation only, never as the
/// sampling engine itself.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Folds `value` into `seed`, producing a new well-mixed seed. Chaining
/// seed_combine over a tuple of integers yields a stable stream id for
/// that tuple.
constexpr std::uint64_t seed_combine(std::uint64_t seed, std::uint64_t value) {
  return splitmix64(seed ^ (0x9e3779b97f4a7c15ull + value + (seed << 6) + (seed >> 2)));
}

/// Deterministic pseudo-random generator.
///
/// The engine is std::mt19937_64, whose output sequence is fully specified
/// by the standard, and every variate below is mapped from raw engine words
/// with explicit arithmetic. Results are therefore bit-identical across
/// platforms and toolchains for a given seed, which the ensemble layer
/// relies on: each sample index gets its own Prng via for_sample(), so
/// ensembles reproduce exactly no matter how the loop is scheduled.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  /// Generator for one sample of an ensemble stream. Streams for distinct
  /// (stream_seed, index) pairs are statistically independent.
  static Prng for_sample(std::uint64_t stream_seed, std::uint64_t sample_index) {
    return Prng(seed_combine(stream_seed, sample_index));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform angle in [0, 2*pi).
  double angle() { return 2.0 * std::numbers::pi * uniform(); }

  /// Unbiased uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// One standard complex Gaussian: real and imaginary parts are
  /// independent N(0, 1) variates (Box-Muller).
  std::complex<double> complex_gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double phase = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(phase), radius * std::sin(phase)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qcx

#endif  // QCX_RNG_HPP_
