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

#ifndef SYMRATIO_GRAPH_HPP_
#define SYMRATIO_GRAPH_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "symratio/errors.hpp"
#include "symratio/numeric.hpp"

namespace symratio {

using Vertex = std::uint32_t;

// Undirected vertex pair stored with u < v. Construct through MakePair so the
// normalization holds everywhere downstream.
struct Pair {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

inline Pair MakePair(Vertex a, Vertex b) {
  if (a == b) {
    throw Error(Errc::kSelfLoop, "pair (" + std::to_string(a) + "," +
                                     std::to_string(b) + ")");
  }
  return a < b ? Pair{a, b} : Pair{b, a};
}

// Column-major upper-triangle numbering: (0,1)=0, (0,2)=1, (1,2)=2, (0,3)=3...
// This is the graph6 bit order and the bit order of labeled-graph masks.
constexpr std::uint64_t PairIndex(const Pair& p) {
  return static_cast<std::uint64_t>(p.v) * (p.v - 1) / 2 + p.u;
}

inline Pair PairFromIndex(std::uint64_t index) {
  Vertex v = 1;
  while (static_cast<std::uint64_t>(v) * (v + 1) / 2 <= index) ++v;
  return Pair{static_cast<Vertex>(index - static_cast<std::uint64_t>(v) * (v - 1) / 2), v};
}

// A set of normalized pairs with value semantics. Equality is set equality.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    for (const auto& [a, b] : pairs) pairs_.push_back(MakePair(a, b));
    Normalize(/*strict=*/false);
  }

  // Throws SelfLoop; duplicates (including reversed pairs) collapse unless
  // `strict`, in which case they raise DuplicateEdge.
  static EdgeSet FromPairs(std::span<const std::pair<Vertex, Vertex>> pairs,
                           bool strict = false) {
    EdgeSet out;
    out.pairs_.reserve(pairs.size());
    for (const auto& [a, b] : pairs) out.pairs_.push_back(MakePair(a, b));
    out.Normalize(strict);
    return out;
  }

  static EdgeSet FromNormalized(std::vector<Pair> pairs) {
    EdgeSet out;
    out.pairs_ = std::move(pairs);
    out.Normalize(/*strict=*/false);
    return out;
  }

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }
  const Pair& operator[](std::size_t i) const { return pairs_[i]; }
  std::span<const Pair> pairs() const { return pairs_; }

  bool contains(const Pair& p) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), p);
  }
  bool IsSubsetOf(const EdgeSet& other) const {
    return std::includes(other.pairs_.begin(), other.pairs_.end(),
                         pairs_.begin(), pairs_.end());
  }
  // Largest vertex mentioned plus one; 0 for the empty set.
  Vertex VertexBound() const {
    Vertex r = 0;
    for (const Pair& p : pairs_) r = std::max(r, p.v + 1);
    return r;
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) {
    return a.pairs_ <=> b.pairs_;
  }

 private:
  void Normalize(bool strict) {
    std::sort(pairs_.begin(), pairs_.end());
    auto last = std::unique(pairs_.begin(), pairs_.end());
    if (strict && last != pairs_.end()) {
      throw Error(Errc::kDuplicateEdge,
                  "pair (" + std::to_string(last->u) + "," +
                      std::to_string(last->v) + ") given twice");
    }
    pairs_.erase(last, pairs_.end());
  }

  std::vector<Pair> pairs_;
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
    for (const Pair& p : s) {
      h ^= (static_cast<std::uint64_t>(p.u) << 32 | p.v) + 0x9e3779b97f4a7c15ULL +
           (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  Graph(Vertex n, EdgeSet edges) : n_(n), edges_(std::move(edges)) {
    for (const Pair& p : edges_) {
      if (p.v >= n_) {
        throw Error(Errc::kVertexOutOfRange,
                    "vertex " + std::to_string(p.v) + " with n=" + std::to_string(n_));
      }
    }
    words_ = (n_ + 63) / 64;
    rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (const Pair& p : edges_) {
      SetBit(p.u, p.v);
      SetBit(p.v, p.u);
    }
  }

  Vertex n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const EdgeSet& edges() const { return edges_; }

  bool HasEdge(Vertex a, Vertex b) const {
    return (rows_[static_cast<std::size_t>(a) * words_ + b / 64] >> (b % 64)) & 1U;
  }
  bool HasEdge(const Pair& p) const { return HasEdge(p.u, p.v); }

  std::span<const std::uint64_t> Row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  std::size_t Degree(Vertex v) const {
    CheckVertex(v);
    std::size_t d = 0;
    for (std::uint64_t w : Row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::vector<Vertex> Neighbors(Vertex v) const {
    CheckVertex(v);
    std::vector<Vertex> out;
    const auto row = Row(v);
    for (std::size_t i = 0; i < row.size(); ++i) {
      for (std::uint64_t w = row[i]; w != 0; w &= w - 1) {
        out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
      }
    }
    return out;
  }

  void CheckVertex(Vertex v) const {
    if (v >= n_) {
      throw Error(Errc::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " with n=" + std::to_string(n_));
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void SetBit(Vertex a, Vertex b) {
    rows_[static_cast<std::size_t>(a) * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  }

  Vertex n_ = 0;
  EdgeSet edges_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

inline Graph MakeGraph(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs,
                       bool strict = false) {
  return Graph(n, EdgeSet::FromPairs(pairs, strict));
}

inline Graph MakeGraph(Vertex n,
                       std::initializer_list<std::pair<Vertex, Vertex>> pairs,
                       bool strict = false) {
  std::vector<std::pair<Vertex, Vertex>> v(pairs);
  return MakeGraph(n, std::span<const std::pair<Vertex, Vertex>>(v), strict);
}

inline Graph DeleteEdges(const Graph& g, const EdgeSet& removed) {
  if (!removed.IsSubsetOf(g.edges())) {
    throw Error(Errc::kNotASubset, "edge set is not contained in the graph");
  }
  std::vector<Pair> kept;
  kept.reserve(g.m() - removed.size());
  std::set_difference(g.edges().begin(), g.edges().end(), removed.begin(),
                      removed.end(), std::back_inserter(kept));
  return Graph(g.n(), EdgeSet::FromNormalized(std::move(kept)));
}

// Adds pairs that must currently be non-edges.
inline Graph AddEdges(const Graph& g, const EdgeSet& added) {
  std::vector<Pair> all(g.edges().begin(), g.edges().end());
  for (const Pair& p : added) {
    g.CheckVertex(p.v);
    if (g.HasEdge(p)) {
      throw Error(Errc::kDuplicateEdge, "pair (" + std::to_string(p.u) + "," +
                                            std::to_string(p.v) + ") already present");
    }
    all.push_back(p);
  }
  return Graph(g.n(), EdgeSet::FromNormalized(std::move(all)));
}

inline EdgeSet IncidentEdges(const Graph& g, Vertex v) {
  std::vector<Pair> out;
  for (Vertex w : g.Neighbors(v)) out.push_back(MakePair(v, w));
  return EdgeSet::FromNormalized(std::move(out));
}

inline EdgeSet NonEdges(const Graph& g) {
  std::vector<Pair> out;
  for (Vertex v = 1; v < g.n(); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (!g.HasEdge(u, v)) out.push_back(Pair{u, v});
    }
  }
  return EdgeSet::FromNormalized(std::move(out));
}

inline bool IsConnected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<bool> seen(g.n(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.Neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.n();
}

// graph6 codec. Bits follow PairIndex order, packed six per printable byte
// (value + 63) with the first bit in the most significant position.
namespace graph6_internal {

inline void AppendSixBits(std::string& out, std::uint64_t value, int groups) {
  for (int i = groups - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3F) + 63));
  }
}

}  // namespace graph6_internal

inline std::string EmitGraph6(const Graph& g) {
  std::string out;
  const std::uint64_t n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    graph6_internal::AppendSixBits(out, n, 3);
  } else {
    out.append("~~");
    graph6_internal::AppendSixBits(out, n, 6);
  }
  int filled = 0;
  unsigned acc = 0;
  for (Vertex v = 1; v < g.n(); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.HasEdge(u, v) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph ParseGraph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Error(Errc::kMalformedGraph6, "empty string");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw Error(Errc::kMalformedGraph6, "byte outside printable range 63..126");
    }
  }
  auto take = [&](std::size_t count) {
    if (text.size() < count) throw Error(Errc::kMalformedGraph6, "truncated size field");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < count; ++i) value = (value << 6) | (text[i] - 63);
    text.remove_prefix(count);
    return value;
  };
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() >= 2 && text[1] == '~') {
    text.remove_prefix(2);
    n = take(6);
  } else {
    text.remove_prefix(1);
    n = take(3);
  }
  if (n > 0xFFFFFFFFULL) throw Error(Errc::kMalformedGraph6, "vertex count too large");
  const std::uint64_t bits = PairCount(n);
  if (text.size() != (bits + 5) / 6) {
    throw Error(Errc::kMalformedGraph6,
                "expected " + std::to_string((bits + 5) / 6) + " adjacency bytes for n=" +
                    std::to_string(n) + ", got " + std::to_string(text.size()));
  }
  std::vector<Pair> pairs;
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned group = static_cast<unsigned>(text[i] - 63);
    for (int b = 5; b >= 0; --b, ++index) {
      const bool set = (group >> b) & 1U;
      if (index >= bits) {
        if (set) throw Error(Errc::kMalformedGraph6, "non-zero padding bits");
        continue;
      }
      if (set) pairs.push_back(PairFromIndex(index));
    }
  }
  return Graph(static_cast<Vertex>(n), EdgeSet::FromNormalized(std::move(pairs)));
}

// Edge-list text: a header line "n m" followed by m lines "u v".
inline Graph ParseEdgeList(std::istream& in) {
  std::string line;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw Error(Errc::kMalformedEdgeList, "missing 'n m' header");
  long long n = -1, m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) {
      throw Error(Errc::kMalformedEdgeList, "bad header line '" + line + "'");
    }
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) {
      throw Error(Errc::kMalformedEdgeList, "expected " + std::to_string(m) +
                                                " edges, got " + std::to_string(i));
    }
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra) || u < 0 || v < 0) {
      throw Error(Errc::kMalformedEdgeList, "bad edge line '" + line + "'");
    }
    if (u >= n || v >= n) {
      throw Error(Errc::kVertexOutOfRange, "edge line '" + line + "'");
    }
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line()) throw Error(Errc::kMalformedEdgeList, "trailing content after edges");
  return MakeGraph(static_cast<Vertex>(n), pairs);
}

inline Graph ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseEdgeList(in);
}

inline std::string EmitEdgeList(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const Pair& p : g.edges()) {
    out += std::to_string(p.u) + " " + std::to_string(p.v) + "\n";
  }
  return out;
}

// Labeled-graph enumeration: bit i of `mask` selects PairFromIndex(i).
inline Graph GraphFromMask(Vertex n, std::uint64_t mask) {
  std::vector<Pair> pairs;
  for (; mask != 0; mask &= mask - 1) {
    pairs.push_back(PairFromIndex(static_cast<std::uint64_t>(std::countr_zero(mask))));
  }
  return Graph(n, EdgeSet::FromNormalized(std::move(pairs)));
}

inline std::uint64_t GraphMask(const Graph& g) {
  if (PairCount(g.n()) > 64) {
    throw Error(Errc::kCapExceeded, "graph too large for a 64-bit edge mask");
  }
  std::uint64_t mask = 0;
  for (const Pair& p : g.edges()) mask |= std::uint64_t{1} << PairIndex(p);
  return mask;
}

inline constexpr Vertex kDefaultEnumerationCap = 6;
// 2^C(n,2) must fit the 64-bit mask space.
inline constexpr Vertex kMaxEnumerable = 11;

inline void CheckEnumerable(Vertex n, Vertex cap) {
  if (n > cap || n > kMaxEnumerable) {
    throw Error(Errc::kCapExceeded, "labeled enumeration at n=" + std::to_string(n) +
                                        " exceeds cap " +
                                        std::to_string(std::min(cap, kMaxEnumerable)));
  }
}

// Calls visit(graph, mask) for every labeled graph on n vertices, in mask
// order. Single-consumer; stop early by returning false from `visit`.
template <typename Visitor>
void ForEachLabeledGraph(Vertex n, Visitor&& visit, Vertex cap = kDefaultEnumerationCap) {
  CheckEnumerable(n, cap);
  const std::uint64_t bits = PairCount(n);
  const std::uint64_t end = std::uint64_t{1} << bits;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    using Result = std::invoke_result_t<Visitor, const Graph&, std::uint64_t>;
    if constexpr (std::is_same_v<Result, bool>) {
      if (!visit(GraphFromMask(n, mask), mask)) return;
    } else {
      visit(GraphFromMask(n, mask), mask);
    }
  }
}

}  // namespace symratio

#endif  // SYMRATIO_GRAPH_HPP_
