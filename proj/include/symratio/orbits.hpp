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

#ifndef SYMRATIO_ORBITS_HPP_
#define SYMRATIO_ORBITS_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "symratio/errors.hpp"
#include "symratio/graph.hpp"
#include "symratio/perm_group.hpp"

namespace symratio {

enum class OrbitKind { kVertex, kPair, kPairSet };

// Image set {f(x) : f in group} of a seed entity x, sorted ascending.
template <typename Element>
struct Orbit {
  OrbitKind kind;
  std::vector<Element> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const Element& x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }
};

namespace orbit_internal {

struct VertexHash {
  std::size_t operator()(Vertex v) const noexcept { return v; }
};
struct PairHash {
  std::size_t operator()(const Pair& p) const noexcept {
    return static_cast<std::size_t>(PairIndex(p) * 0x9e3779b97f4a7c15ULL);
  }
};

// Closure of {seed} under the generators; for a finite group this is the
// full orbit because inverses are positive powers of the generators.
template <typename Element, typename Hash, typename Apply>
std::vector<Element> Closure(const Element& seed, std::span<const Perm> generators,
                             Apply apply) {
  std::vector<Element> found{seed};
  std::unordered_set<Element, Hash> seen{seed};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const Perm& g : generators) {
      Element next = apply(g, found[head]);
      if (seen.insert(next).second) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

// Pair sets on up to 11 vertices fit in one 64-bit word indexed by PairIndex;
// each generator then acts through a lookup table on pair indices.
inline bool FitsMask(Vertex degree) { return PairCount(degree) <= 64; }

struct MaskHash {
  std::size_t operator()(std::uint64_t x) const noexcept {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

inline std::vector<std::uint64_t> MaskClosure(const PermGroup& group, const EdgeSet& set) {
  const std::uint64_t pairs = PairCount(group.degree());
  std::vector<std::vector<std::uint8_t>> tables;
  for (const Perm& g : group.generators()) {
    std::vector<std::uint8_t>& t = tables.emplace_back(pairs);
    for (std::uint64_t i = 0; i < pairs; ++i) {
      t[i] = static_cast<std::uint8_t>(PairIndex(ApplyPair(g, PairFromIndex(i))));
    }
  }
  std::uint64_t seed = 0;
  for (const Pair& p : set) seed |= std::uint64_t{1} << PairIndex(p);
  std::vector<std::uint64_t> found{seed};
  std::unordered_set<std::uint64_t, MaskHash> seen{seed};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& t : tables) {
      std::uint64_t next = 0;
      for (std::uint64_t m = found[head]; m != 0; m &= m - 1) {
        next |= std::uint64_t{1} << t[std::countr_zero(m)];
      }
      if (seen.insert(next).second) found.push_back(next);
    }
  }
  return found;
}

}  // namespace orbit_internal

inline Orbit<Vertex> VertexOrbit(const PermGroup& group, Vertex v) {
  if (v >= group.degree()) CheckDegree(group.degree(), v + 1);
  return {OrbitKind::kVertex,
          orbit_internal::Closure<Vertex, orbit_internal::VertexHash>(
              v, group.generators(), [](const Perm& g, Vertex x) { return g(x); })};
}

inline Orbit<Pair> PairOrbit(const PermGroup& group, const Pair& p) {
  if (p.v >= group.degree()) CheckDegree(group.degree(), p.v + 1);
  return {OrbitKind::kPair,
          orbit_internal::Closure<Pair, orbit_internal::PairHash>(
              p, group.generators(), [](const Perm& g, const Pair& x) { return ApplyPair(g, x); })};
}

// Orbit of a whole set of pairs, compared as sets. The pairs may be edges,
// non-edges, or a mixture; only the group matters.
inline Orbit<EdgeSet> EdgeSetOrbit(const PermGroup& group, const EdgeSet& set) {
  if (set.VertexBound() > group.degree()) CheckDegree(group.degree(), set.VertexBound());
  if (!orbit_internal::FitsMask(group.degree())) {
    return {OrbitKind::kPairSet,
            orbit_internal::Closure<EdgeSet, EdgeSetHash>(
                set, group.generators(),
                [](const Perm& g, const EdgeSet& x) { return ApplySet(g, x); })};
  }
  Orbit<EdgeSet> out{OrbitKind::kPairSet, {}};
  for (std::uint64_t mask : orbit_internal::MaskClosure(group, set)) {
    std::vector<Pair> pairs;
    for (; mask != 0; mask &= mask - 1) pairs.push_back(PairFromIndex(std::countr_zero(mask)));
    out.elements.push_back(EdgeSet::FromNormalized(std::move(pairs)));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

// |EdgeSetOrbit(group, set)| without materializing the members.
inline std::size_t EdgeSetOrbitSize(const PermGroup& group, const EdgeSet& set) {
  if (set.VertexBound() > group.degree()) CheckDegree(group.degree(), set.VertexBound());
  if (!orbit_internal::FitsMask(group.degree())) return EdgeSetOrbit(group, set).size();
  return orbit_internal::MaskClosure(group, set).size();
}

}  // namespace symratio

#endif  // SYMRATIO_ORBITS_HPP_
