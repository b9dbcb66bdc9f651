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

#ifndef SYMRATIO_IDENTITY_HPP_
#define SYMRATIO_IDENTITY_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symratio/aut_search.hpp"
#include "symratio/errors.hpp"
#include "symratio/graph.hpp"
#include "symratio/numeric.hpp"
#include "symratio/orbits.hpp"
#include "symratio/perm_group.hpp"
#include "symratio/random.hpp"

namespace symratio {

// |Aut(G)| * |AO_{G-E'}(E')| against |Aut(G-E')| * |AO_G(E')|. The orbit of
// E' is taken as a set of edges under Aut(G) and as a set of non-edges under
// Aut(G-E'); both are recorded so they cannot be swapped silently.
struct IdentityReport {
  BigInt aut_g;
  std::uint64_t ao_g = 0;
  BigInt aut_g_minus;
  std::uint64_t ao_g_minus = 0;
  BigInt lhs_cross;  // aut_g * ao_g_minus
  BigInt rhs_cross;  // aut_g_minus * ao_g
  bool holds = false;
  BigRational ratio;  // aut_g / ao_g
};

inline void CheckRemovable(const Graph& g, const EdgeSet& removed) {
  if (removed.empty()) throw Error(Errc::kEmptyEdgeSet, "E' must be nonempty");
  if (!removed.IsSubsetOf(g.edges())) {
    throw Error(Errc::kNotASubset, "E' must be a subset of the graph's edges");
  }
}

inline IdentityReport VerifyRatioIdentity(const Graph& g, const PermGroup& aut_g,
                                          const EdgeSet& removed) {
  CheckRemovable(g, removed);
  CheckDegree(aut_g.degree(), g.n());
  const Graph minus = DeleteEdges(g, removed);
  const PermGroup aut_minus = AutomorphismGroup(minus);

  IdentityReport r;
  r.aut_g = aut_g.order();
  r.ao_g = EdgeSetOrbitSize(aut_g, removed);
  r.aut_g_minus = aut_minus.order();
  r.ao_g_minus = EdgeSetOrbitSize(aut_minus, removed);
  r.lhs_cross = r.aut_g * r.ao_g_minus;
  r.rhs_cross = r.aut_g_minus * r.ao_g;
  r.holds = r.lhs_cross == r.rhs_cross;
  r.ratio = BigRational(r.aut_g, BigInt(r.ao_g));
  return r;
}

inline IdentityReport VerifyRatioIdentity(const Graph& g, const EdgeSet& removed) {
  CheckRemovable(g, removed);
  return VerifyRatioIdentity(g, AutomorphismGroup(g), removed);
}

// Which nonempty subsets E' of each graph's edges a sweep checks. Modes can
// be combined; random subsets are drawn per graph from a stream keyed by the
// graph mask, so the selection is independent of thread count.
struct SubsetPolicy {
  bool single_edges = false;
  bool all_subsets = false;
  std::uint32_t random_samples = 0;
  std::uint64_t seed = 0;

  static SubsetPolicy SingleEdges() { return {.single_edges = true}; }
  static SubsetPolicy AllSubsets() { return {.all_subsets = true}; }
  static SubsetPolicy Random(std::uint32_t samples, std::uint64_t seed) {
    return {.random_samples = samples, .seed = seed};
  }
};

inline constexpr Vertex kAllSubsetsCap = 5;

struct SweepCheck {
  std::string graph6;
  EdgeSet removed;
  IdentityReport report;
};

struct SweepSummary {
  Vertex n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::optional<SweepCheck> first_violation;
  // Every check, in graph order; only filled when SweepOptions::keep_rows.
  std::vector<SweepCheck> rows;
};

struct SweepOptions {
  unsigned threads = 1;
  bool keep_rows = false;
};

inline std::vector<EdgeSet> SelectSubsets(const EdgeSet& edges, const SubsetPolicy& policy,
                                          std::uint64_t stream) {
  std::vector<EdgeSet> out;
  if (edges.empty()) return out;
  if (policy.all_subsets) {
    const std::uint64_t end = std::uint64_t{1} << edges.size();
    for (std::uint64_t bits = 1; bits < end; ++bits) {
      std::vector<Pair> picked;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if ((bits >> i) & 1U) picked.push_back(edges[i]);
      }
      out.push_back(EdgeSet::FromNormalized(std::move(picked)));
    }
  } else if (policy.single_edges) {
    for (const Pair& p : edges) out.push_back(EdgeSet::FromNormalized({p}));
  }
  if (policy.random_samples > 0) {
    Rng rng = StreamRng(policy.seed, stream);
    for (std::uint32_t i = 0; i < policy.random_samples; ++i) {
      out.push_back(RandomNonemptySubset(edges, rng));
    }
  }
  return out;
}

namespace identity_internal {

struct GraphResult {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::optional<SweepCheck> first_violation;
  std::vector<SweepCheck> rows;
};

inline GraphResult CheckGraph(const Graph& g, const std::vector<EdgeSet>& subsets,
                              bool keep_rows) {
  GraphResult out;
  if (subsets.empty()) return out;
  const PermGroup aut = AutomorphismGroup(g);
  for (const EdgeSet& removed : subsets) {
    IdentityReport report = VerifyRatioIdentity(g, aut, removed);
    ++out.checks;
    if (!report.holds) {
      ++out.violations;
      if (!out.first_violation) out.first_violation = SweepCheck{EmitGraph6(g), removed, report};
    }
    if (keep_rows) out.rows.push_back(SweepCheck{EmitGraph6(g), removed, std::move(report)});
  }
  return out;
}

inline SweepSummary Merge(Vertex n, std::vector<GraphResult>& results) {
  SweepSummary summary;
  summary.n = n;
  summary.graphs = results.size();
  for (GraphResult& r : results) {
    summary.checks += r.checks;
    summary.violations += r.violations;
    if (!summary.first_violation && r.first_violation) {
      summary.first_violation = std::move(r.first_violation);
    }
    std::move(r.rows.begin(), r.rows.end(), std::back_inserter(summary.rows));
  }
  return summary;
}

}  // namespace identity_internal

// Every labeled graph on n vertices (mask order) against the policy's subsets.
inline SweepSummary SweepVerify(Vertex n, const SubsetPolicy& policy,
                                const SweepOptions& options = {}) {
  if (policy.all_subsets && n > kAllSubsetsCap) {
    throw Error(Errc::kCapExceeded, "all-subsets sweep limited to n <= " +
                                        std::to_string(kAllSubsetsCap));
  }
  CheckEnumerable(n, kDefaultEnumerationCap);
  const std::uint64_t count = std::uint64_t{1} << PairCount(n);
  std::vector<identity_internal::GraphResult> results(count);
  ParallelFor(count, options.threads, [&](std::uint64_t mask, unsigned) {
    const Graph g = GraphFromMask(n, mask);
    results[mask] = identity_internal::CheckGraph(g, SelectSubsets(g.edges(), policy, mask),
                                                  options.keep_rows);
  });
  return identity_internal::Merge(n, results);
}

// `graphs` samples of G(n, m) with m uniform in [1, C(n,2)], each checked
// against `subsets_per_graph` random nonempty subsets.
inline SweepSummary SweepRandomGraphs(Vertex n, std::uint64_t graphs,
                                      std::uint32_t subsets_per_graph, std::uint64_t seed,
                                      const SweepOptions& options = {}) {
  if (n < 2) throw Error(Errc::kRangeError, "random sweep needs n >= 2");
  std::vector<identity_internal::GraphResult> results(graphs);
  const SubsetPolicy policy = SubsetPolicy::Random(subsets_per_graph, MixSeed(seed, 1));
  ParallelFor(graphs, options.threads, [&](std::uint64_t i, unsigned) {
    Rng rng = StreamRng(seed, 2 * i + 2);
    const std::uint64_t m =
        std::uniform_int_distribution<std::uint64_t>(1, PairCount(n))(rng);
    const Graph g = SampleEr(n, m, rng);
    results[i] = identity_internal::CheckGraph(g, SelectSubsets(g.edges(), policy, i),
                                               options.keep_rows);
  });
  return identity_internal::Merge(n, results);
}

}  // namespace symratio

#endif  // SYMRATIO_IDENTITY_HPP_
