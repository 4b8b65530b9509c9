// Copyright 2026 The bernsched Authors.
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

#ifndef BERNSCHED_SEED_STREAM_H_
#define BERNSCHED_SEED_STREAM_H_

#include <cstdint>
#include <limits>

namespace bernsched {

// Counter-based pseudo-random substream. The pair (master_seed, stream_index)
// fixes the whole sequence, so Monte Carlo trial i can use stream i no matter
// which thread runs it. Output k is SplitMix64's finalizer applied to
// key + k * golden_gamma, with the key derived from both seed halves.
//
// Satisfies UniformRandomBitGenerator, so it plugs into <random> as well.
class SeedStream {
 public:
  using result_type = std::uint64_t;

  SeedStream(std::uint64_t master_seed, std::uint64_t stream_index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform on [0, 1) with 53 random bits; identical on every platform.
  double NextUniform();

  // True with probability p (exactly true for p >= 1).
  bool Bernoulli(double p);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace bernsched

#endif  // BERNSCHED_SEED_STREAM_H_
