// Copyright 2026 The heraldsim Authors
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

#include "herald/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace herald {

uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  // splitmix64 (Steele, Lea, Flood). One round per input word.
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<TrialSlice> partition_trials(uint64_t seed, long long trials) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const long long streams =
      std::min<long long>(kMonteCarloStreams, trials);
  std::vector<TrialSlice> slices(static_cast<size_t>(streams));
  const long long base = trials / streams;
  const long long extra = trials % streams;
  for (long long i = 0; i < streams; ++i) {
    slices[static_cast<size_t>(i)].seed =
        mix_seed(seed, static_cast<uint64_t>(i));
    slices[static_cast<size_t>(i)].trials = base + (i < extra ? 1 : 0);
  }
  return slices;
}

}  // namespace herald
