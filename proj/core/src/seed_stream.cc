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

#include "bernsched/seed_stream.h"

namespace bernsched {
namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

SeedStream::SeedStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      key_(Mix64(Mix64(master_seed) ^ Mix64(stream_index + kGoldenGamma))) {}

SeedStream::result_type SeedStream::operator()() {
  ++counter_;
  return Mix64(key_ + counter_ * kGoldenGamma);
}

double SeedStream::NextUniform() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

bool SeedStream::Bernoulli(double p) {
  if (p >= 1.0) return true;
  return NextUniform() < p;
}

}  // namespace bernsched
