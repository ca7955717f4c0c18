// Copyright 2026 The cswitch Authors
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

#ifndef CSWITCH_RNG_H_
#define CSWITCH_RNG_H_

#include <array>
#include <cstdint>

namespace cswitch {

// xoshiro256** seeded through SplitMix64. The output sequence is fully
// specified here so augmented corpora are byte-identical across platforms
// and standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  // Independent stream for one record: the (seed, key) pair is mixed before
  // seeding, so streams do not depend on processing order.
  Rng(std::uint64_t seed, std::uint64_t key);

  std::uint64_t next();
  // Uniform integer in [0, bound). bound must be positive. Lemire's
  // multiply-shift with rejection, so there is no modulo bias.
  std::uint64_t uniform(std::uint64_t bound);
  // Uniform double in [0, 1) with 53 bits of precision.
  double unit();

  std::uint64_t draws() const { return draws_; }

 private:
  std::array<std::uint64_t, 4> state_{};
  std::uint64_t draws_ = 0;
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace cswitch

#endif  // CSWITCH_RNG_H_
