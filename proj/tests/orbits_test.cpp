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

#include <random>
#include <set>

#include "oracles.hpp"
#include "symratio.hpp"

namespace symratio {
namespace {

Graph DoubleBroom() { return MakeGraph(7, {{0, 4}, {1, 4}, {4, 5}, {5, 6}, {2, 6}, {3, 6}}); }

std::set<std::set<std::pair<Vertex, Vertex>>> AsOracleSets(const Orbit<EdgeSet>& orbit) {
  std::set<std::set<std::pair<Vertex, Vertex>>> out;
  for (const EdgeSet& s : orbit.elements) out.insert(oracle::AsSet(oracle::Pairs(s)));
  return out;
}

// a..g = 0..6.
TEST(EdgeSetOrbitTest, DoubleBroomPairSet) {
  const PermGroup aut = AutomorphismGroup(DoubleBroom());
  const auto orbit = EdgeSetOrbit(aut, EdgeSet{{0, 4}, {4, 5}});
  EXPECT_EQ(orbit.kind, OrbitKind::kPairSet);
  const std::vector<EdgeSet> expected{
      EdgeSet{{0, 4}, {4, 5}}, EdgeSet{{5, 6}, {2, 6}}, EdgeSet{{1, 4}, {4, 5}},
      EdgeSet{{5, 6}, {3, 6}}};
  ASSERT_EQ(orbit.size(), 4u);
  for (const EdgeSet& s : expected) EXPECT_TRUE(orbit.contains(s));
  EXPECT_FALSE(orbit.contains(EdgeSet{{0, 4}, {5, 6}}));
}

TEST(VertexOrbitTest, DoubleBroom) {
  const PermGroup aut = AutomorphismGroup(DoubleBroom());
  EXPECT_EQ(VertexOrbit(aut, 0).elements, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(VertexOrbit(aut, 5).elements, (std::vector<Vertex>{5}));
  EXPECT_EQ(VertexOrbit(aut, 6).elements, (std::vector<Vertex>{4, 6}));
  EXPECT_EQ(VertexOrbit(aut, 0).kind, OrbitKind::kVertex);
}

TEST(PairOrbitTest, EdgesAndNonEdges) {
  const PermGroup aut = AutomorphismGroup(DoubleBroom());
  EXPECT_EQ(PairOrbit(aut, {0, 4}).size(), 4u);
  EXPECT_EQ(PairOrbit(aut, {4, 5}).size(), 2u);
  // Non-edge a-b stays within its side; a-c maps across.
  EXPECT_EQ(PairOrbit(aut, {0, 1}).size(), 2u);
  EXPECT_EQ(PairOrbit(aut, {0, 2}).size(), 4u);
}

TEST(OrbitTest, TrivialGroupGivesSingletons) {
  const PermGroup trivial = PermGroup::Trivial(5);
  EXPECT_EQ(VertexOrbit(trivial, 3).size(), 1u);
  EXPECT_EQ(EdgeSetOrbit(trivial, EdgeSet{{0, 1}, {2, 3}}).size(), 1u);
  EXPECT_EQ(EdgeSetOrbit(trivial, EdgeSet{}).size(), 1u);
}

TEST(OrbitTest, OrbitStabilizerOnRandomGraphs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex n = 3 + trial % 4;
    const Graph g = GraphFromMask(n, rng() & ((std::uint64_t{1} << PairCount(n)) - 1));
    const PermGroup aut = AutomorphismGroup(g);
    const auto elements = EnumerateElements(aut);
    std::vector<Pair> pairs(g.edges().begin(), g.edges().end());
    std::vector<Pair> chosen;
    for (const Pair& p : pairs) {
      if (rng() & 1) chosen.push_back(p);
    }
    const EdgeSet s = EdgeSet::FromNormalized(chosen);
    std::size_t stabilizer = 0;
    for (const Perm& f : elements) stabilizer += ApplySet(f, s) == s;
    EXPECT_EQ(EdgeSetOrbit(aut, s).size() * stabilizer, elements.size());
    for (Vertex v = 0; v < n; ++v) {
      std::size_t fixes = 0;
      for (const Perm& f : elements) fixes += f(v) == v;
      EXPECT_EQ(VertexOrbit(aut, v).size() * fixes, elements.size());
    }
  }
}

TEST(OrbitTest, MatchesFullEnumerationOnRandomSets) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Vertex n = 4 + trial % 3;
    const Graph g = GraphFromMask(n, rng() & ((std::uint64_t{1} << PairCount(n)) - 1));
    const PermGroup aut = AutomorphismGroup(g);
    std::vector<Pair> chosen;
    for (std::uint64_t i = 0; i < PairCount(n); ++i) {
      if (rng() % 3 == 0) chosen.push_back(PairFromIndex(i));
    }
    const EdgeSet s = EdgeSet::FromNormalized(chosen);
    EXPECT_EQ(AsOracleSets(EdgeSetOrbit(aut, s)), oracle::SetOrbit(g, s));
    const std::set<Vertex> vo = oracle::VertexOrbit(g, 0);
    const auto ours = VertexOrbit(aut, 0).elements;
    EXPECT_EQ(std::set<Vertex>(ours.begin(), ours.end()), vo);
  }
}

// Above 11 vertices pair sets no longer fit a 64-bit word.
TEST(OrbitTest, LargeDegreeUsesGenericClosure) {
  for (Vertex n : {11u, 12u, 14u}) {
    std::vector<std::pair<Vertex, Vertex>> cycle;
    for (Vertex i = 0; i < n; ++i) cycle.emplace_back(i, (i + 1) % n);
    const PermGroup aut = AutomorphismGroup(MakeGraph(n, cycle));
    EXPECT_EQ(EdgeSetOrbit(aut, EdgeSet{{0, 1}}).size(), n);
    EXPECT_EQ(EdgeSetOrbit(aut, EdgeSet{{0, 1}, {1, 2}}).size(), n);
    EXPECT_EQ(EdgeSetOrbitSize(aut, EdgeSet{{0, 1}, {2, 3}}), n);
    EXPECT_EQ(EdgeSetOrbit(aut, EdgeSet{{0, 2}}).size(), n);
  }
  const PermGroup s12 = AutomorphismGroup(Graph(12, {}));
  EXPECT_EQ(EdgeSetOrbitSize(s12, EdgeSet{{0, 1}, {2, 3}}), 66u * 45u / 2u);
}

TEST(OrbitTest, SizeMatchesMaterializedOrbit) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Vertex n = 5 + trial % 4;
    const Graph g = GraphFromMask(n, rng() & ((std::uint64_t{1} << PairCount(n)) - 1));
    const PermGroup aut = AutomorphismGroup(g);
    Rng pick(rng());
    const EdgeSet s = RandomNonemptySubset(NonEdges(Graph(n, {})), pick);
    EXPECT_EQ(EdgeSetOrbitSize(aut, s), EdgeSetOrbit(aut, s).size());
  }
}

}  // namespace
}  // namespace symratio
