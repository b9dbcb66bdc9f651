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

#ifndef SYMRATIO_AUT_SEARCH_HPP_
#define SYMRATIO_AUT_SEARCH_HPP_

// Automorphism groups and canonical certificates by individualization-
// refinement. Every search-tree node is an ordered partition refined to the
// coarsest equitable partition; the target cell is the first non-singleton
// cell of minimum size. Leaves are discrete partitions, read as a labeling
// (position -> vertex).
//
// The group is built nauty-style along the first root-to-leaf path: at each
// level, every target-cell vertex not yet in the orbit of the path vertex
// is tested by searching its subtree for a leaf whose relabeled adjacency
// equals that of the first leaf. |Aut| is the product of the resulting
// stabilizer orbit lengths. The certificate is the minimum relabeled
// adjacency over all leaves, with sibling subtrees skipped when a found
// generator fixing the current prefix maps one onto the other.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symratio/errors.hpp"
#include "symratio/graph.hpp"
#include "symratio/numeric.hpp"
#include "symratio/perm_group.hpp"

namespace symratio {

struct OrderedPartition {
  std::vector<std::vector<Vertex>> cells;

  static OrderedPartition Unit(Vertex n) {
    OrderedPartition p;
    if (n == 0) return p;
    p.cells.emplace_back(n);
    std::iota(p.cells.front().begin(), p.cells.front().end(), Vertex{0});
    return p;
  }

  bool IsDiscrete() const {
    return std::all_of(cells.begin(), cells.end(),
                       [](const auto& c) { return c.size() == 1; });
  }

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

// Relabeling-invariant adjacency string: bit (i, j), i < j, in row-major
// upper-triangle order, packed most-significant-bit first so that comparing
// the word vectors compares the bit strings lexicographically.
struct Certificate {
  Vertex n = 0;
  std::vector<std::uint64_t> bits;

  friend bool operator==(const Certificate&, const Certificate&) = default;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;

  // "<n>:<hex>" with exactly ceil(C(n,2)/4) hex digits.
  std::string Hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::uint64_t nbits = PairCount(n);
    std::string out = std::to_string(n) + ":";
    for (std::uint64_t t = 0; t < nbits; t += 4) {
      unsigned nibble = 0;
      for (std::uint64_t b = t; b < t + 4; ++b) {
        nibble <<= 1;
        if (b < nbits && ((bits[b / 64] >> (63 - b % 64)) & 1U)) nibble |= 1;
      }
      out.push_back(kDigits[nibble]);
    }
    return out;
  }
};

struct CertificateHash {
  std::size_t operator()(const Certificate& c) const noexcept {
    std::uint64_t h = 0x84222325cbf29ce4ULL ^ c.n;
    for (std::uint64_t w : c.bits) h = (h ^ w) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }
};

namespace aut_internal {

class Refiner {
 public:
  explicit Refiner(const Graph& g) : n_(g.n()), adjacency_(g.n()) {
    for (const Pair& p : g.edges()) {
      adjacency_[p.u].push_back(p.v);
      adjacency_[p.v].push_back(p.u);
    }
  }

  // Repeatedly splits every cell by the multiset of neighbor cell indices of
  // its members (computed against the cell indices at the start of the
  // round). New sub-cells take the place of their parent, ordered by that
  // signature. Stops once a round splits nothing.
  OrderedPartition Refine(OrderedPartition p) const {
    std::vector<std::uint32_t> color(n_);
    std::vector<std::vector<std::uint32_t>> signature(n_);
    std::vector<std::size_t> order;
    for (;;) {
      for (std::uint32_t ci = 0; ci < p.cells.size(); ++ci) {
        for (Vertex v : p.cells[ci]) color[v] = ci;
      }
      bool split = false;
      std::vector<std::vector<Vertex>> next;
      next.reserve(p.cells.size());
      for (auto& cell : p.cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        for (Vertex v : cell) {
          auto& sig = signature[v];
          sig.clear();
          for (Vertex w : adjacency_[v]) sig.push_back(color[w]);
          std::sort(sig.begin(), sig.end());
        }
        std::sort(cell.begin(), cell.end(), [&](Vertex a, Vertex b) {
          if (signature[a] != signature[b]) return signature[a] < signature[b];
          return a < b;
        });
        const std::size_t before = next.size();
        std::size_t start = 0;
        for (std::size_t i = 1; i <= cell.size(); ++i) {
          if (i == cell.size() || signature[cell[i]] != signature[cell[start]]) {
            next.emplace_back(cell.begin() + static_cast<std::ptrdiff_t>(start),
                              cell.begin() + static_cast<std::ptrdiff_t>(i));
            start = i;
          }
        }
        if (next.size() - before > 1) split = true;
      }
      p.cells = std::move(next);
      if (!split) return p;
    }
  }

  // Cell sizes plus, per cell, a hash of one member's neighbor cell indices.
  // Equal for any two nodes related by an automorphism.
  std::vector<std::uint64_t> Invariant(const OrderedPartition& p) const {
    std::vector<std::uint32_t> color(n_);
    for (std::uint32_t ci = 0; ci < p.cells.size(); ++ci) {
      for (Vertex v : p.cells[ci]) color[v] = ci;
    }
    std::vector<std::uint64_t> out;
    out.reserve(2 * p.cells.size());
    std::vector<std::uint32_t> sig;
    for (const auto& cell : p.cells) {
      sig.clear();
      for (Vertex w : adjacency_[cell.front()]) sig.push_back(color[w]);
      std::sort(sig.begin(), sig.end());
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (std::uint32_t c : sig) h = (h ^ c) * 0x100000001b3ULL;
      out.push_back(cell.size());
      out.push_back(h);
    }
    return out;
  }

 private:
  Vertex n_;
  std::vector<std::vector<Vertex>> adjacency_;
};

inline std::size_t TargetCell(const OrderedPartition& p) {
  std::size_t best = p.cells.size();
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    if (p.cells[i].size() > 1 &&
        (best == p.cells.size() || p.cells[i].size() < p.cells[best].size())) {
      best = i;
    }
  }
  return best;
}

inline OrderedPartition Individualize(const OrderedPartition& p, std::size_t cell, Vertex v) {
  OrderedPartition out;
  out.cells.reserve(p.cells.size() + 1);
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    if (i != cell) {
      out.cells.push_back(p.cells[i]);
      continue;
    }
    out.cells.push_back({v});
    std::vector<Vertex> rest;
    rest.reserve(p.cells[i].size() - 1);
    for (Vertex w : p.cells[i]) {
      if (w != v) rest.push_back(w);
    }
    out.cells.push_back(std::move(rest));
  }
  return out;
}

inline std::vector<Vertex> Labeling(const OrderedPartition& leaf) {
  std::vector<Vertex> order;
  order.reserve(leaf.cells.size());
  for (const auto& cell : leaf.cells) order.push_back(cell.front());
  return order;
}

inline Certificate RelabeledAdjacency(const Graph& g, const std::vector<Vertex>& order) {
  Certificate c;
  c.n = g.n();
  c.bits.assign((PairCount(g.n()) + 63) / 64, 0);
  std::uint64_t t = 0;
  for (Vertex i = 0; i < g.n(); ++i) {
    for (Vertex j = i + 1; j < g.n(); ++j, ++t) {
      if (g.HasEdge(order[i], order[j])) c.bits[t / 64] |= std::uint64_t{1} << (63 - t % 64);
    }
  }
  return c;
}

class Search {
 public:
  explicit Search(const Graph& g) : graph_(g), refiner_(g) {}

  PermGroup FindGroup() {
    BuildFirstPath();
    BigInt order = 1;
    for (std::size_t level = path_.size(); level-- > 0;) {
      const Node& node = path_[level];
      const auto& cell = node.partition.cells[node.target];
      std::vector<Vertex> roots = VertexOrbitRoots(graph_.n(), generators_);
      std::vector<Vertex> failed;
      for (Vertex w : cell) {
        if (roots[w] == roots[node.chosen]) continue;
        if (std::any_of(failed.begin(), failed.end(),
                        [&](Vertex f) { return roots[f] == roots[w]; })) {
          continue;
        }
        auto child = refiner_.Refine(Individualize(node.partition, node.target, w));
        if (auto gamma = FindEquivalentLeaf(child, level + 1)) {
          generators_.push_back(std::move(*gamma));
          roots = VertexOrbitRoots(graph_.n(), generators_);
        } else {
          failed.push_back(w);
        }
      }
      order *= static_cast<std::uint64_t>(
          std::count(roots.begin(), roots.end(), roots[node.chosen]));
    }
    return PermGroup(graph_.n(), generators_, order);
  }

  // Requires FindGroup() to have run; its generators drive sibling pruning.
  std::pair<Certificate, std::vector<Vertex>> FindCanonical() {
    best_.reset();
    std::vector<Vertex> prefix;
    Explore(path_.empty() ? first_leaf_ : path_.front().partition, prefix);
    return *best_;
  }

 private:
  struct Node {
    OrderedPartition partition;
    std::size_t target = 0;
    Vertex chosen = 0;
    std::vector<std::uint64_t> invariant;
  };

  void BuildFirstPath() {
    OrderedPartition current = refiner_.Refine(OrderedPartition::Unit(graph_.n()));
    while (!current.IsDiscrete()) {
      Node node;
      node.target = TargetCell(current);
      node.chosen = current.cells[node.target].front();
      node.invariant = refiner_.Invariant(current);
      auto child = refiner_.Refine(Individualize(current, node.target, node.chosen));
      node.partition = std::move(current);
      path_.push_back(std::move(node));
      current = std::move(child);
    }
    first_leaf_ = current;
    first_order_ = Labeling(current);
    first_code_ = RelabeledAdjacency(graph_, first_order_);
  }

  std::optional<Perm> FindEquivalentLeaf(const OrderedPartition& p, std::size_t depth) {
    if (depth == path_.size()) {
      if (!p.IsDiscrete()) return std::nullopt;
      const auto order = Labeling(p);
      if (RelabeledAdjacency(graph_, order) != first_code_) return std::nullopt;
      std::vector<Vertex> images(graph_.n());
      for (Vertex i = 0; i < graph_.n(); ++i) images[first_order_[i]] = order[i];
      return Perm(std::move(images));
    }
    if (p.IsDiscrete() || refiner_.Invariant(p) != path_[depth].invariant) return std::nullopt;
    const std::size_t target = TargetCell(p);
    for (Vertex w : p.cells[target]) {
      auto child = refiner_.Refine(Individualize(p, target, w));
      if (auto gamma = FindEquivalentLeaf(child, depth + 1)) return gamma;
    }
    return std::nullopt;
  }

  void Explore(const OrderedPartition& p, std::vector<Vertex>& prefix) {
    if (p.IsDiscrete()) {
      auto order = Labeling(p);
      auto code = RelabeledAdjacency(graph_, order);
      if (!best_ || code < best_->first) best_.emplace(std::move(code), std::move(order));
      return;
    }
    std::vector<Perm> fixing;
    for (const Perm& g : generators_) {
      if (std::all_of(prefix.begin(), prefix.end(), [&](Vertex x) { return g(x) == x; })) {
        fixing.push_back(g);
      }
    }
    const std::vector<Vertex> roots = VertexOrbitRoots(graph_.n(), fixing);
    const std::size_t target = TargetCell(p);
    std::set<Vertex> explored;
    for (Vertex w : p.cells[target]) {
      if (!explored.insert(roots[w]).second) continue;
      prefix.push_back(w);
      Explore(refiner_.Refine(Individualize(p, target, w)), prefix);
      prefix.pop_back();
    }
  }

  const Graph& graph_;
  Refiner refiner_;
  std::vector<Node> path_;
  OrderedPartition first_leaf_;
  std::vector<Vertex> first_order_;
  Certificate first_code_;
  std::vector<Perm> generators_;
  std::optional<std::pair<Certificate, std::vector<Vertex>>> best_;
};

}  // namespace aut_internal

inline OrderedPartition ColorRefine(const Graph& g, OrderedPartition initial) {
  std::vector<bool> seen(g.n(), false);
  std::size_t total = 0;
  for (auto& cell : initial.cells) {
    if (cell.empty()) throw Error(Errc::kPreconditionViolated, "empty cell in partition");
    for (Vertex v : cell) {
      g.CheckVertex(v);
      if (seen[v]) throw Error(Errc::kPreconditionViolated, "vertex in two cells");
      seen[v] = true;
    }
    total += cell.size();
    std::sort(cell.begin(), cell.end());
  }
  if (total != g.n()) {
    throw Error(Errc::kPreconditionViolated, "partition does not cover all vertices");
  }
  return aut_internal::Refiner(g).Refine(std::move(initial));
}

inline OrderedPartition ColorRefine(const Graph& g) {
  return ColorRefine(g, OrderedPartition::Unit(g.n()));
}

inline PermGroup AutomorphismGroup(const Graph& g) {
  return aut_internal::Search(g).FindGroup();
}

struct AutomorphismInfo {
  PermGroup group;
  Certificate certificate;
  // canonical_order[i] is the vertex that receives canonical label i.
  std::vector<Vertex> canonical_order;
};

inline AutomorphismInfo AnalyzeAutomorphisms(const Graph& g) {
  aut_internal::Search search(g);
  AutomorphismInfo info;
  info.group = search.FindGroup();
  auto [certificate, order] = search.FindCanonical();
  info.certificate = std::move(certificate);
  info.canonical_order = std::move(order);
  return info;
}

inline Certificate CanonicalForm(const Graph& g) {
  return AnalyzeAutomorphisms(g).certificate;
}

inline bool IsIsomorphic(const Graph& g, const Graph& h) {
  if (g.n() != h.n() || g.m() != h.m()) return false;
  return CanonicalForm(g) == CanonicalForm(h);
}

}  // namespace symratio

#endif  // SYMRATIO_AUT_SEARCH_HPP_
