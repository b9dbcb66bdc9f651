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
#include <set>
#include <string>

#include "symratio.hpp"

namespace symratio {
namespace {

Graph DoubleBroom() { return MakeGraph(7, {{0, 4}, {1, 4}, {4, 5}, {5, 6}, {2, 6}, {3, 6}}); }

template <typename F>
Errc CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no symratio::Error thrown";
  return Errc::kPreconditionViolated;
}

TEST(PairTest, NormalizesOrder) {
  EXPECT_EQ(MakePair(5, 2), (Pair{2, 5}));
  EXPECT_EQ(CodeOf([] { MakePair(3, 3); }), Errc::kSelfLoop);
}

TEST(PairTest, IndexRoundTrip) {
  for (std::uint64_t i = 0; i < PairCount(40); ++i) EXPECT_EQ(PairIndex(PairFromIndex(i)), i);
  // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3) ...
  EXPECT_EQ(PairFromIndex(0), (Pair{0, 1}));
  EXPECT_EQ(PairFromIndex(2), (Pair{1, 2}));
  EXPECT_EQ(PairFromIndex(3), (Pair{0, 3}));
}

TEST(EdgeSetTest, SortsAndCollapsesDuplicates) {
  EdgeSet s{{3, 1}, {0, 2}, {1, 3}};
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (Pair{0, 2}));
  EXPECT_EQ(s[1], (Pair{1, 3}));
  EXPECT_TRUE(s.contains({1, 3}));
  EXPECT_FALSE(s.contains({0, 1}));
  EXPECT_EQ(s.VertexBound(), 4u);
}

TEST(EdgeSetTest, StrictRejectsDuplicates) {
  std::vector<std::pair<Vertex, Vertex>> pairs{{0, 1}, {1, 0}};
  EXPECT_EQ(CodeOf([&] { EdgeSet::FromPairs(pairs, /*strict=*/true); }), Errc::kDuplicateEdge);
  EXPECT_EQ(EdgeSet::FromPairs(pairs).size(), 1u);
}

TEST(EdgeSetTest, Subset) {
  EdgeSet a{{0, 1}, {2, 3}};
  EdgeSet b{{0, 1}, {1, 2}, {2, 3}};
  EXPECT_TRUE(a.IsSubsetOf(b));
  EXPECT_FALSE(b.IsSubsetOf(a));
  EXPECT_TRUE(EdgeSet{}.IsSubsetOf(a));
}

TEST(GraphTest, BasicQueries) {
  const Graph g = DoubleBroom();
  EXPECT_EQ(g.n(), 7u);
  EXPECT_EQ(g.m(), 6u);
  EXPECT_TRUE(g.HasEdge(4, 0));
  EXPECT_FALSE(g.HasEdge(0, 1));
  EXPECT_EQ(g.Degree(4), 3u);
  EXPECT_EQ(g.Neighbors(6), (std::vector<Vertex>{2, 3, 5}));
  EXPECT_TRUE(IsConnected(g));
  EXPECT_EQ(CodeOf([] { MakeGraph(3, {{0, 3}}); }), Errc::kVertexOutOfRange);
}

TEST(GraphTest, DeleteAndAddEdges) {
  const Graph g = DoubleBroom();
  const EdgeSet removed{{0, 4}, {4, 5}};
  const Graph h = DeleteEdges(g, removed);
  EXPECT_EQ(h.m(), 4u);
  EXPECT_FALSE(h.HasEdge(0, 4));
  EXPECT_FALSE(IsConnected(h));
  EXPECT_EQ(AddEdges(h, removed), g);
  EXPECT_EQ(CodeOf([&] { DeleteEdges(g, EdgeSet{{0, 1}}); }), Errc::kNotASubset);
  EXPECT_EQ(CodeOf([&] { AddEdges(g, EdgeSet{{0, 4}}); }), Errc::kDuplicateEdge);
}

TEST(GraphTest, IncidentAndNonEdges) {
  const Graph g = DoubleBroom();
  EXPECT_EQ(IncidentEdges(g, 6), (EdgeSet{{2, 6}, {3, 6}, {5, 6}}));
  EXPECT_EQ(NonEdges(g).size(), PairCount(7) - 6);
  EXPECT_TRUE(IsConnected(Graph(1, {})));
  EXPECT_FALSE(IsConnected(Graph(2, {})));
}

// Values produced by an independent graph6 encoder on the same labelings.
TEST(Graph6Test, KnownStrings) {
  EXPECT_EQ(EmitGraph6(DoubleBroom()), "F?oHg");
  EXPECT_EQ(EmitGraph6(MakeGraph(3, {{0, 1}, {1, 2}})), "Bg");
  EXPECT_EQ(EmitGraph6(MakeGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})), "C~");
  EXPECT_EQ(EmitGraph6(MakeGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})), "Dhc");
  EXPECT_EQ(EmitGraph6(MakeGraph(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7},
                                      {3, 4}, {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9},
                                      {7, 9}})),
            "IheA@GUAo");
  EXPECT_EQ(EmitGraph6(MakeGraph(2, {{0, 1}})), "A_");
  EXPECT_EQ(EmitGraph6(Graph(0, {})), "?");
  EXPECT_EQ(EmitGraph6(Graph(1, {})), "@");
}

TEST(Graph6Test, LongSizeField) {
  const Graph g = MakeGraph(63, {{0, 62}, {5, 40}});
  const std::string s = EmitGraph6(g);
  ASSERT_EQ(s.size(), 330u);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char want = '?';
    if (i == 0 || i == 3) want = '~';
    if (i == 134) want = '@';
    if (i == 319) want = 'O';
    EXPECT_EQ(s[i], want) << "byte " << i;
  }
  EXPECT_EQ(ParseGraph6(s), g);

  const Graph h = MakeGraph(100, {{0, 99}, {3, 50}, {98, 99}});
  const std::string t = EmitGraph6(h);
  ASSERT_EQ(t.size(), 829u);
  const std::map<std::size_t, char> special{{0, '~'}, {2, '@'},   {3, 'c'},
                                            {208, 'A'}, {812, 'C'}, {828, '@'}};
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto it = special.find(i);
    EXPECT_EQ(t[i], it == special.end() ? '?' : it->second) << "byte " << i;
  }
  EXPECT_EQ(ParseGraph6(t), h);
}

TEST(Graph6Test, RoundTripAllSmallGraphs) {
  for (Vertex n = 0; n <= 5; ++n) {
    ForEachLabeledGraph(n, [](const Graph& g, std::uint64_t) {
      EXPECT_EQ(ParseGraph6(EmitGraph6(g)), g);
    });
  }
}

TEST(Graph6Test, AcceptsHeaderAndTrailingNewline) {
  EXPECT_EQ(ParseGraph6(">>graph6<<Bg\n"), MakeGraph(3, {{0, 1}, {1, 2}}));
}

TEST(Graph6Test, RejectsMalformed) {
  EXPECT_EQ(CodeOf([] { ParseGraph6(""); }), Errc::kMalformedGraph6);
  EXPECT_EQ(CodeOf([] { ParseGraph6("F?oH"); }), Errc::kMalformedGraph6);
  EXPECT_EQ(CodeOf([] { ParseGraph6("F?oHgg"); }), Errc::kMalformedGraph6);
  EXPECT_EQ(CodeOf([] { ParseGraph6("B!"); }), Errc::kMalformedGraph6);
  // n=3 has 3 bits; "Bh" sets a padding bit.
  EXPECT_EQ(CodeOf([] { ParseGraph6("Bh"); }), Errc::kMalformedGraph6);
  EXPECT_EQ(CodeOf([] { ParseGraph6("~?"); }), Errc::kMalformedGraph6);
}

TEST(EdgeListTest, RoundTrip) {
  const Graph g = DoubleBroom();
  EXPECT_EQ(ParseEdgeList(EmitEdgeList(g)), g);
  EXPECT_EQ(ParseEdgeList("3 2\n0 1\n\n2 1\n"), MakeGraph(3, {{0, 1}, {1, 2}}));
}

TEST(EdgeListTest, RejectsMalformed) {
  EXPECT_EQ(CodeOf([] { ParseEdgeList(""); }), Errc::kMalformedEdgeList);
  EXPECT_EQ(CodeOf([] { ParseEdgeList("3 2\n0 1\n"); }), Errc::kMalformedEdgeList);
  EXPECT_EQ(CodeOf([] { ParseEdgeList("3 1\n0 1\n1 2\n"); }), Errc::kMalformedEdgeList);
  EXPECT_EQ(CodeOf([] { ParseEdgeList("3 1\n0 x\n"); }), Errc::kMalformedEdgeList);
  EXPECT_EQ(CodeOf([] { ParseEdgeList("3 1\n0 3\n"); }), Errc::kVertexOutOfRange);
  EXPECT_EQ(CodeOf([] { ParseEdgeList("3 1\n1 1\n"); }), Errc::kSelfLoop);
}

TEST(EnumerationTest, VisitsEveryLabeledGraphOnce) {
  for (Vertex n = 0; n <= 5; ++n) {
    std::set<std::string> seen;
    std::uint64_t expected_mask = 0;
    ForEachLabeledGraph(n, [&](const Graph& g, std::uint64_t mask) {
      EXPECT_EQ(mask, expected_mask++);
      EXPECT_EQ(GraphMask(g), mask);
      seen.insert(EmitGraph6(g));
    });
    EXPECT_EQ(seen.size(), std::uint64_t{1} << PairCount(n));
  }
}

TEST(EnumerationTest, EarlyStop) {
  int visits = 0;
  ForEachLabeledGraph(4, [&](const Graph&, std::uint64_t) { return ++visits < 5; });
  EXPECT_EQ(visits, 5);
}

TEST(EnumerationTest, CapEnforced) {
  EXPECT_EQ(CodeOf([] { ForEachLabeledGraph(7, [](const Graph&, std::uint64_t) {}); }),
            Errc::kCapExceeded);
  EXPECT_EQ(CodeOf([] { CheckEnumerable(12, 12); }), Errc::kCapExceeded);
}

TEST(NumericTest, Combinatorics) {
  EXPECT_EQ(Factorial(0), 1);
  EXPECT_EQ(Factorial(20), BigInt("2432902008176640000"));
  EXPECT_EQ(FallingFactorial(10, 3), 720);
  EXPECT_EQ(FallingFactorial(3, 5), 0);
  EXPECT_EQ(Binomial(66, 33), BigInt("7219428434016265740"));
  EXPECT_EQ(Binomial(4, 7), 0);
  EXPECT_EQ(ExactDivide(12, 4, "x"), 3);
  EXPECT_EQ(CodeOf([] { ExactDivide(7, 2, "x"); }), Errc::kNotDivisible);
  EXPECT_EQ(ToString(BigRational(6, 4)), "3/2");
}

}  // namespace
}  // namespace symratio
