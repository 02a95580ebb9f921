// Copyright 2026 The FairSDP Authors.
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

#ifndef FAIRSDP_RNG_HPP_
#define FAIRSDP_RNG_HPP_

#include <cstdint>
#include <random>

namespace fairsdp {

// Seeded random stream used by every stochastic stage in the library.
//
// The raw generator is the 64-bit Mersenne Twister (mt19937_64), whose
// output sequence is fixed by the C++ standard.  All derived draws below
// are defined directly on that stream rather than through the standard
// <random> distributions, which are free to differ between standard
// library implementations.  Given a seed, every draw here is reproducible
// across platforms and compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1): the top 53 bits of one raw draw.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo, hi).  Requires lo <= hi.
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // True with probability p (clamped to [0, 1]).
  bool bernoulli(double p) { return uniform01() < p; }

  // Uniform integer in [0, n), unbiased via rejection.  Requires n > 0.
  std::uint64_t uniform_index(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace fairsdp

#endif  // FAIRSDP_RNG_HPP_
