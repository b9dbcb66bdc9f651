// Copyright 2026 The symratio Authors
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

#ifndef SYMRATIO_RANDOM_HPP_
#define SYMRATIO_RANDOM_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "symratio/errors.hpp"
#include "symratio/graph.hpp"
#include "symratio/numeric.hpp"

namespace symratio {

using Rng = std::mt19937_64;

// SplitMix64 finalizer; used to derive independent stream seeds from a master
// seed so results do not depend on how work is split across threads.
constexpr std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rng StreamRng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(MixSeed(seed, stream));
}

// Uniform G(n, m): Floyd's sampling of m distinct pair indices out of C(n,2).
inline Graph SampleEr(Vertex n, std::uint64_t m, Rng& rng) {
  const std::uint64_t total = PairCount(n);
  if (m > total) {
    throw Error(Errc::kMOutOfRange,
                "m=" + std::to_string(m) + " exceeds C(n,2)=" + std::to_string(total));
  }
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m);
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = std::uniform_int_distribution<std::uint64_t>(0, j)(rng);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<Pair> pairs;
  pairs.reserve(m);
  for (std::uint64_t index : chosen) pairs.push_back(PairFromIndex(index));
  return Graph(n, EdgeSet::FromNormalized(std::move(pairs)));
}

inline Graph SampleEr(Vertex n, std::uint64_t m, std::uint64_t seed) {
  Rng rng(MixSeed(seed, 0));
  return SampleEr(n, m, rng);
}

// Nonempty subset of `edges`, each member kept with probability 1/2,
// resampled until nonempty.
inline EdgeSet RandomNonemptySubset(const EdgeSet& edges, Rng& rng) {
  if (edges.empty()) throw Error(Errc::kEmptyEdgeSet, "no edges to choose from");
  for (;;) {
    std::vector<Pair> picked;
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i % 64 == 0) bits = rng();
      if ((bits >> (i % 64)) & 1U) picked.push_back(edges[i]);
    }
    if (!picked.empty()) return EdgeSet::FromNormalized(std::move(picked));
  }
}

// Runs body(task, worker) for task in [0, count) on `threads` workers pulling
// from a shared counter. With threads <= 1 everything runs inline.
template <typename Body>
void ParallelFor(std::uint64_t count, unsigned threads, Body&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i, 0U);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  std::atomic<std::uint64_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i, w);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(count);
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace symratio

#endif  // SYMRATIO_RANDOM_HPP_
