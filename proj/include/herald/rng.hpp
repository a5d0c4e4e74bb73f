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

#ifndef HERALD_RNG_HPP
#define HERALD_RNG_HPP

#include <atomic>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace herald {

/// splitmix64 finalizer; used to derive independent stream seeds.
uint64_t mix_seed(uint64_t seed, uint64_t stream);

/// Deterministic sampling layer over std::mt19937_64.
///
/// The <random> distribution classes are implementation-defined, so sampled
/// sequences would differ between standard libraries. Everything here is
/// pinned to the raw engine output and therefore portable, which keeps
/// golden files and seeded test expectations stable.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). Unbiased (rejection sampling). n >= 1.
  uint32_t uniform_below(uint32_t n) {
    const uint64_t span = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return static_cast<uint32_t>(draw % span);
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Monte Carlo work is always split over a fixed number of logical streams,
/// independent of how many worker threads execute them. Results therefore
/// depend only on (seed, trials), never on the --jobs setting.
inline constexpr int kMonteCarloStreams = 64;

struct TrialSlice {
  uint64_t seed = 0;
  long long trials = 0;
};

/// Splits `trials` over the logical streams (fewer streams than
/// kMonteCarloStreams when trials is small).
std::vector<TrialSlice> partition_trials(uint64_t seed, long long trials);

/// Runs `fn(rng, n_trials, accumulator)` once per slice and returns the
/// accumulators in slice order. `jobs` bounds the worker thread count; the
/// result is identical for any value of `jobs`.
template <typename Acc, typename Fn>
std::vector<Acc> run_partitioned(uint64_t seed, long long trials, int jobs,
                                 Fn fn) {
  const std::vector<TrialSlice> slices = partition_trials(seed, trials);
  std::vector<Acc> accumulators(slices.size());
  if (jobs <= 1 || slices.size() <= 1) {
    for (size_t i = 0; i < slices.size(); ++i) {
      Rng rng(slices[i].seed);
      fn(rng, slices[i].trials, accumulators[i]);
    }
    return accumulators;
  }
  const int workers =
      std::min<int>(jobs, static_cast<int>(slices.size()));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<size_t> next{0};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (size_t i = next.fetch_add(1); i < slices.size();
           i = next.fetch_add(1)) {
        Rng rng(slices[i].seed);
        fn(rng, slices[i].trials, accumulators[i]);
      }
    });
  }
  for (auto& t : pool) t.join();
  return accumulators;
}

}  // namespace herald

#endif  // HERALD_RNG_HPP
