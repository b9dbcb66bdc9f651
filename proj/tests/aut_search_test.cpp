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


#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "symratio.hpp"

namespace symratio {
namespace {

Graph DoubleBroom() { return MakeGraph(7, {{0, 4}, {1, 4}, {4, 5}, {5, 6}, {2, 6}, {3, 6}}); }

Graph Relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> images(g.n());
  std::iota(images.begin(), images.end(), Vertex{0});
  std::shuffle(images.begin(), images.end(), rng);
  return ApplyGraph(Perm(images), g);
}

bool IsEquitable(const Graph& g, const OrderedPartition& p) {
  std::vector<std::size_t> cell_of(g.n());
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    for (Vertex v : p.cells[c]) cell_of[v] = c;
  }
  for (const auto& cell : p.cells) {
    for (std::size_t target = 0; target < p.cells.size(); ++target) {
      std::set<std::size_t> counts;
      for (Vertex v : cell) {
        std::size_t k = 0;
        for (Vertex w : g.Neighbors(v)) k += cell_of[w] == target;
        counts.insert(k);
      }
      if (counts.size() > 1) return false;
    }
  }
  return true;
}

TEST(ColorRefineTest, ProducesEquitablePartitions) {
  for (Vertex n = 1; n <= 5; ++n) {
    ForEachLabeledGraph(n, [](const Graph& g, std::uint64_t) {
      const OrderedPartition p = ColorRefine(g);
      EXPECT_TRUE(IsEquitable(g, p)) << EmitGraph6(g);
      std::size_t total = 0;
      for (const auto& cell : p.cells) total += cell.size();
      EXPECT_EQ(total, g.n());
    });
  }
}

TEST(ColorRefineTest, SeparatesDegreesOnDoubleBroom) {
  const OrderedPartition p = ColorRefine(DoubleBroom());
  std::set<std::vector<Vertex>> cells(p.cells.begin(), p.cells.end());
  EXPECT_TRUE(cells.contains({0, 1, 2, 3}));
  EXPECT_TRUE(cells.contains({4, 6}));
  EXPECT_TRUE(cells.contains({5}));
}

TEST(ColorRefineTest, RejectsBadInitialPartition) {
  OrderedPartition p;
  p.cells = {{0, 1}, {1, 2}};
  EXPECT_THROW(ColorRefine(MakeGraph(3, {{0, 1}}), p), Error);
}

TEST(AutomorphismGroupTest, WorkedExample) {
  const Graph g = DoubleBroom();
  const PermGroup aut = AutomorphismGroup(g);
  EXPECT_EQ(aut.order(), 8);
  for (const Perm& f : aut.generators()) EXPECT_TRUE(IsAutomorphism(f, g));
  // Swapping a and c alone is not an automorphism.
  EXPECT_FALSE(IsAutomorphism(Perm::FromCycles(7, {{0, 2}}), g));
}

TEST(AutomorphismGroupTest, Families) {
  EXPECT_EQ(AutomorphismGroup(MakeGraph(3, {{0, 1}, {0, 2}, {1, 2}})).order(), 6);
  EXPECT_EQ(AutomorphismGroup(Graph(6, {})).order(), 720);
  const Graph petersen = ParseGraph6("IheA@GUAo");
  EXPECT_EQ(AutomorphismGroup(petersen).order(), 120);
  // Cycles have dihedral symmetry, paths a single reflection.
  for (Vertex n = 3; n <= 12; ++n) {
    std::vector<std::pair<Vertex, Vertex>> cycle, path;
    for (Vertex i = 0; i < n; ++i) cycle.emplace_back(i, (i + 1) % n);
    for (Vertex i = 0; i + 1 < n; ++i) path.emplace_back(i, i + 1);
    EXPECT_EQ(AutomorphismGroup(MakeGraph(n, cycle)).order(), 2 * n);
    EXPECT_EQ(AutomorphismGroup(MakeGraph(n, path)).order(), 2);
  }
  // Disjoint union of k triangles: 6^k k!.
  std::vector<std::pair<Vertex, Vertex>> tris;
  for (Vertex t = 0; t < 4; ++t) {
    tris.emplace_back(3 * t, 3 * t + 1);
    tris.emplace_back(3 * t, 3 * t + 2);
    tris.emplace_back(3 * t + 1, 3 * t + 2);
  }
  EXPECT_EQ(AutomorphismGroup(MakeGraph(12, tris)).order(), 6 * 6 * 6 * 6 * 24);
}

TEST(AutomorphismGroupTest, FirstAsymmetricGraphOnSixVertices) {
  const Graph g = GraphFromMask(6, 1198);
  EXPECT_EQ(g.edges(), (EdgeSet{{0, 2}, {1, 2}, {0, 3}, {2, 3}, {1, 4}, {0, 5}}));
  EXPECT_EQ(AutomorphismGroup(g).order(), 1);
}

TEST(AutomorphismGroupTest, MatchesBruteForceOnRandomSevenVertexGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = GraphFromMask(7, rng() & ((std::uint64_t{1} << 21) - 1));
    EXPECT_EQ(AutomorphismGroup(g).order(), oracle::AutOrder(g)) << EmitGraph6(g);
  }
}

TEST(CanonicalFormTest, InvariantUnderRelabeling) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Vertex n = 3 + trial % 8;
    std::bernoulli_distribution coin(0.4);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex u = 0; u < v; ++u) {
        if (coin(rng)) pairs.emplace_back(u, v);
      }
    }
    const Graph g = MakeGraph(n, pairs);
    const Graph h = Relabel(g, rng);
    EXPECT_EQ(CanonicalForm(g), CanonicalForm(h));
    EXPECT_EQ(AutomorphismGroup(g).order(), AutomorphismGroup(h).order());
    EXPECT_TRUE(IsIsomorphic(g, h));
  }
}

// Certificates must separate exactly the brute-force isomorphism classes.
TEST(CanonicalFormTest, ClassesAgreeWithBruteForceUpToFiveVertices) {
  for (Vertex n = 1; n <= 5; ++n) {
    std::map<Certificate, std::string> ours_to_oracle;
    std::map<std::string, Certificate> oracle_to_ours;
    ForEachLabeledGraph(n, [&](const Graph& g, std::uint64_t) {
      const Certificate c = CanonicalForm(g);
      const std::string o = oracle::Canon(g);
      const auto a = ours_to_oracle.emplace(c, o).first;
      const auto b = oracle_to_ours.emplace(o, c).first;
      EXPECT_EQ(a->second, o);
      EXPECT_EQ(b->second, c);
    });
    const std::map<Vertex, std::size_t> known{{1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 34}};
    EXPECT_EQ(ours_to_oracle.size(), known.at(n));
  }
}

TEST(CanonicalFormTest, NonIsomorphicGraphsDiffer) {
  // Same degree sequence, different graphs: C6 and two triangles.
  const Graph c6 = MakeGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  const Graph tt = MakeGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(IsIsomorphic(c6, tt));
  EXPECT_EQ(ColorRefine(c6).cells.size(), 1u);
  EXPECT_EQ(ColorRefine(tt).cells.size(), 1u);
  EXPECT_EQ(AutomorphismGroup(tt).order(), 72);
}

TEST(CanonicalFormTest, CertificateEncoding) {
  EXPECT_EQ(CanonicalForm(DoubleBroom()).Hex(), "7:084270");
  const AutomorphismInfo info = AnalyzeAutomorphisms(DoubleBroom());
  EXPECT_EQ(info.certificate, CanonicalForm(DoubleBroom()));
}

TEST(CanonicalFormTest, CanonicalLabelingGivesIdenticalGraphs) {
  std::mt19937_64 rng(5);
  const Graph g = DoubleBroom();
  const Graph h = Relabel(g, rng);
  auto canonical = [](const Graph& x) {
    const AutomorphismInfo info = AnalyzeAutomorphisms(x);
    return ApplyGraph(Inverse(Perm(info.canonical_order)), x);
  };
  EXPECT_EQ(canonical(g), canonical(h));
}

}  // namespace
}  // namespace symratio
