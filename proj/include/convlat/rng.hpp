// Copyright 2026 The Authors.
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

// Deterministic pseudo-random source for samplers and falsification.
//
// Reports must be byte-identical across platforms for a fixed seed, so the
// generator (splitmix64) and the integer distributions are implemented here
// rather than delegated to the standard library, whose distribution objects
// are implementation-defined.

#pragma once

#include <cstdint>

#include "convlat/rational.hpp"

namespace convlat {

/// splitmix64: tiny, well-mixed, and fully specified.  Used both as the
/// per-trial generator and to derive independent per-trial seeds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) via rejection sampling (no modulo bias).
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % bound;
  }

  /// Uniform integer in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next_u64() & 1) != 0; }

  /// Random canonical rational num/den with den in [1, den_bound] and
  /// num in [-mag*den, mag*den], i.e. a value in [-mag, mag].
  Rational rational(long mag, long den_bound) {
    const long den = range(1, den_bound);
    const long num = range(-mag * den, mag * den);
    return make_rational(num, den);
  }

  /// Independent stream for trial `index` under a master seed: falsification
  /// results are then invariant to trial scheduling.
  static Rng for_trial(std::uint64_t master_seed, std::uint64_t index) {
    Rng mix(master_seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return Rng(mix.next_u64());
  }

 private:
  std::uint64_t state_;
};

}  // namespace convlat
