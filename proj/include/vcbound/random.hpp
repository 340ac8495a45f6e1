// Copyright 2026 The vcbound Authors
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

#pragma once

#include <cmath>
#include <cstdint>

namespace vcbound {

// SplitMix64 (Steele, Lea, Flood 2014). Every draw is a pure function of the
// starting state and the draw index, which makes streams reproducible
// bit-for-bit on any platform.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on the open interval (0, 1): the top 53 bits, offset by half a step.
  double uniform() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Standard normal variates by Marsaglia's polar method. Only sqrt and log of
// the uniforms are involved, so no trigonometric libm calls enter the stream.
class PolarGaussian {
 public:
  explicit PolarGaussian(SplitMix64& source) : source_(source) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    double v = 0.0;
    double s = 0.0;
    do {
      u = 2.0 * source_.uniform() - 1.0;
      v = 2.0 * source_.uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

 private:
  SplitMix64& source_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Seed of trial `index` under `base_seed`: the index-th output of a SplitMix64
// stream started at base_seed. Independent of how trials are split across
// workers.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
  SplitMix64 g(base_seed + index * SplitMix64::kGolden);
  return g.next();
}

}  // namespace vcbound
