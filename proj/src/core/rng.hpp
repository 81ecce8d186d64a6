// Copyright 2026 The schatten authors
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

#ifndef SCHATTEN_CORE_RNG_HPP_
#define SCHATTEN_CORE_RNG_HPP_

#include <cmath>
#include <complex>
#include <cstdint>

namespace schatten {

// SplitMix64 with a hand-rolled Box-Muller transform.  The standard-library
// distributions have implementation-defined output, which would make seeded
// results differ across toolchains; this generator is bit-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in (0, 1]; never returns 0, so log() below is safe.
  double uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  double normal() {
    const double u = uniform_pos();
    const double v = uniform_pos();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925287 * v);
  }

  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * 0.7071067811865475244, im * 0.7071067811865475244};
  }

 private:
  std::uint64_t state_;
};

}  // namespace schatten

#endif  // SCHATTEN_CORE_RNG_HPP_
