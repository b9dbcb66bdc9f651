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

#ifndef SYMRATIO_PERM_GROUP_HPP_
#define SYMRATIO_PERM_GROUP_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "symratio/errors.hpp"
#include "symratio/graph.hpp"
#include "symratio/numeric.hpp"

namespace symratio {

// A bijection on 0..n-1, stored as its image array.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<Vertex> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Vertex x : images_) {
      if (x >= images_.size() || seen[x]) {
        throw Error(Errc::kInvalidPermutation, "image array is not a bijection");
      }
      seen[x] = true;
    }
  }

  static Perm Identity(Vertex n) {
    Perm p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), Vertex{0});
    return p;
  }

  // Cycle notation, e.g. FromCycles(3, {{0, 1, 2}}) sends 0->1->2->0.
  static Perm FromCycles(Vertex n, std::initializer_list<std::initializer_list<Vertex>> cycles) {
    Perm p = Identity(n);
    for (const auto& cycle : cycles) {
      std::vector<Vertex> c(cycle);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= n) throw Error(Errc::kInvalidPermutation, "cycle entry out of range");
        p.images_[c[i]] = c[(i + 1) % c.size()];
      }
    }
    return Perm(std::move(p.images_));
  }

  Vertex degree() const { return static_cast<Vertex>(images_.size()); }
  Vertex operator()(Vertex x) const { return images_[x]; }
  std::span<const Vertex> images() const { return images_; }

  bool IsIdentity() const {
    for (Vertex i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Vertex> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Vertex x : p.images()) h = (h ^ x) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

inline void CheckDegree(Vertex a, Vertex b) {
  if (a != b) {
    throw Error(Errc::kDegreeMismatch,
                "degree " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// (f o g)(x) = f(g(x))
inline Perm Compose(const Perm& f, const Perm& g) {
  CheckDegree(f.degree(), g.degree());
  std::vector<Vertex> images(f.degree());
  for (Vertex x = 0; x < f.degree(); ++x) images[x] = f(g(x));
  return Perm(std::move(images));
}

inline Perm Inverse(const Perm& f) {
  std::vector<Vertex> images(f.degree());
  for (Vertex x = 0; x < f.degree(); ++x) images[f(x)] = x;
  return Perm(std::move(images));
}

inline Pair ApplyPair(const Perm& f, const Pair& p) {
  if (p.v >= f.degree()) CheckDegree(f.degree(), p.v + 1);
  return MakePair(f(p.u), f(p.v));
}

inline EdgeSet ApplySet(const Perm& f, const EdgeSet& set) {
  if (set.VertexBound() > f.degree()) CheckDegree(f.degree(), set.VertexBound());
  std::vector<Pair> out;
  out.reserve(set.size());
  for (const Pair& p : set) out.push_back(MakePair(f(p.u), f(p.v)));
  return EdgeSet::FromNormalized(std::move(out));
}

inline Graph ApplyGraph(const Perm& f, const Graph& g) {
  CheckDegree(f.degree(), g.n());
  return Graph(g.n(), ApplySet(f, g.edges()));
}

inline bool IsAutomorphism(const Perm& f, const Graph& g) {
  CheckDegree(f.degree(), g.n());
  // f maps E injectively, so E -> E for every edge means f(E) = E.
  for (const Pair& p : g.edges()) {
    if (!g.HasEdge(f(p.u), f(p.v))) return false;
  }
  return true;
}

inline constexpr std::uint64_t kDefaultElementCap = 10'000'000;

// A permutation group given by generators. The order is either supplied by
// whoever built the group (e.g. the search that found the generators) or
// recomputed by closure on request.
class PermGroup {
 public:
  PermGroup() = default;

  PermGroup(Vertex degree, std::vector<Perm> generators,
            std::optional<BigInt> known_order = std::nullopt)
      : degree_(degree), known_order_(std::move(known_order)) {
    for (Perm& g : generators) {
      CheckDegree(degree, g.degree());
      if (!g.IsIdentity()) generators_.push_back(std::move(g));
    }
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  }

  static PermGroup Trivial(Vertex degree) { return PermGroup(degree, {}, BigInt(1)); }

  Vertex degree() const { return degree_; }
  std::span<const Perm> generators() const { return generators_; }
  bool has_known_order() const { return known_order_.has_value(); }

  BigInt order(std::uint64_t cap = kDefaultElementCap) const;

 private:
  Vertex degree_ = 0;
  std::vector<Perm> generators_;
  std::optional<BigInt> known_order_;
};

// Breadth-first closure from the identity; element i+1.. are discovered by
// left-multiplying earlier elements with generators in sorted order.
inline std::vector<Perm> EnumerateElements(Vertex degree, std::span<const Perm> generators,
                                           std::uint64_t cap = kDefaultElementCap) {
  std::vector<Perm> gens(generators.begin(), generators.end());
  for (const Perm& g : gens) CheckDegree(degree, g.degree());
  std::sort(gens.begin(), gens.end());
  std::vector<Perm> elements{Perm::Identity(degree)};
  std::unordered_set<Perm, PermHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Perm& g : gens) {
      Perm next = Compose(g, elements[head]);
      if (seen.insert(next).second) {
        if (elements.size() >= cap) {
          throw Error(Errc::kCapExceeded,
                      "group has more than " + std::to_string(cap) + " elements");
        }
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

inline std::vector<Perm> EnumerateElements(const PermGroup& group,
                                           std::uint64_t cap = kDefaultElementCap) {
  return EnumerateElements(group.degree(), group.generators(), cap);
}

inline BigInt GroupOrder(Vertex degree, std::span<const Perm> generators,
                         std::uint64_t cap = kDefaultElementCap) {
  return BigInt(EnumerateElements(degree, generators, cap).size());
}

inline BigInt PermGroup::order(std::uint64_t cap) const {
  if (known_order_) return *known_order_;
  return GroupOrder(degree_, generators_, cap);
}

inline constexpr Vertex kBruteForceCap = 8;

// Exhaustive oracle: filters all n! bijections. The returned generators are a
// greedy subset of the automorphisms (lexicographic order) that already
// generates every one of them.
inline PermGroup BruteForceAut(const Graph& g) {
  if (g.n() > kBruteForceCap) {
    throw Error(Errc::kCapExceeded, "brute-force automorphisms limited to n <= " +
                                        std::to_string(kBruteForceCap));
  }
  std::vector<Vertex> images(g.n());
  std::iota(images.begin(), images.end(), Vertex{0});
  std::vector<Perm> automorphisms;
  do {
    bool ok = true;
    for (const Pair& p : g.edges()) {
      if (!g.HasEdge(images[p.u], images[p.v])) {
        ok = false;
        break;
      }
    }
    if (ok) automorphisms.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));

  std::vector<Perm> generators;
  std::unordered_set<Perm, PermHash> closure{Perm::Identity(g.n())};
  for (const Perm& f : automorphisms) {
    if (closure.contains(f)) continue;
    generators.push_back(f);
    const auto elements = EnumerateElements(g.n(), generators);
    closure = std::unordered_set<Perm, PermHash>(elements.begin(), elements.end());
  }
  return PermGroup(g.n(), std::move(generators), BigInt(automorphisms.size()));
}

// Orbit id (smallest member) of every vertex under the generated group.
inline std::vector<Vertex> VertexOrbitRoots(Vertex degree, std::span<const Perm> generators) {
  std::vector<Vertex> parent(degree);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Perm& g : generators) {
    for (Vertex x = 0; x < degree; ++x) {
      Vertex a = find(x), b = find(g(x));
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      parent[b] = a;
    }
  }
  for (Vertex x = 0; x < degree; ++x) parent[x] = find(x);
  return parent;
}

}  // namespace symratio

#endif  // SYMRATIO_PERM_GROUP_HPP_
