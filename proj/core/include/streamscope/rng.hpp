// Copyright 2026 The streamscope Authors
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

#ifndef STREAMSCOPE_RNG_HPP_
#define STREAMSCOPE_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace streamscope {

// Derives an independent child seed from `master` by a fixed label. Each
// consumer of randomness (permutation, phase coins, root sampling, ...) gets
// its own labelled split so the streams never share state.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label);
std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index);

// Deterministic generator. The engine output is fixed by the standard; the
// helpers below avoid the implementation-defined std distributions so that
// identical seeds give identical draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform_index(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool coin(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace streamscope

#endif  // STREAMSCOPE_RNG_HPP_
