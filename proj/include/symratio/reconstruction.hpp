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

#ifndef SYMRATIO_RECONSTRUCTION_HPP_
#define SYMRATIO_RECONSTRUCTION_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <set>
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

enum class DeckKind { kClassic, kAugmented };

struct Card {
  Graph graph;
  std::optional<Vertex> origin;  // known when the deck was built from G
};

struct CardClass {
  Certificate certificate;
  std::size_t representative = 0;  // index into Deck::cards()
  std::uint64_t multiplicity = 0;
};

// Multiset of cards grouped into isomorphism classes (sorted by certificate).
class Deck {
 public:
  Deck() = default;

  Deck(DeckKind kind, std::vector<Card> cards) : kind_(kind), cards_(std::move(cards)) {
    std::map<Certificate, std::size_t> index;
    for (std::size_t i = 0; i < cards_.size(); ++i) {
      if (cards_[i].graph.n() != cards_.front().graph.n()) {
        throw Error(Errc::kPreconditionViolated, "deck cards differ in vertex count");
      }
      Certificate c = CanonicalForm(cards_[i].graph);
      auto [it, inserted] = index.emplace(std::move(c), classes_.size());
      if (inserted) {
        classes_.push_back({it->first, i, 0});
      }
      ++classes_[it->second].multiplicity;
    }
    std::sort(classes_.begin(), classes_.end(),
              [](const CardClass& a, const CardClass& b) { return a.certificate < b.certificate; });
  }

  DeckKind kind() const { return kind_; }
  const std::vector<Card>& cards() const { return cards_; }
  const std::vector<CardClass>& classes() const { return classes_; }
  const Graph& Representative(const CardClass& c) const { return cards_[c.representative].graph; }

  // Vertex count of the graph the deck came from.
  Vertex SourceVertexCount() const {
    if (cards_.empty()) return 0;
    return kind_ == DeckKind::kAugmented ? cards_.front().graph.n() : cards_.front().graph.n() + 1;
  }

  std::uint64_t Multiplicity(const Graph& card) const {
    const Certificate c = CanonicalForm(card);
    for (const CardClass& cls : classes_) {
      if (cls.certificate == c) return cls.multiplicity;
    }
    return 0;
  }

  Deck Blind() const {
    Deck out = *this;
    for (Card& c : out.cards_) c.origin.reset();
    return out;
  }

  // Same multiset of classes with the same multiplicities.
  bool SameMultiset(const Deck& other) const {
    if (kind_ != other.kind_ || classes_.size() != other.classes_.size()) return false;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      if (classes_[i].certificate != other.classes_[i].certificate ||
          classes_[i].multiplicity != other.classes_[i].multiplicity) {
        return false;
      }
    }
    return true;
  }

 private:
  DeckKind kind_ = DeckKind::kAugmented;
  std::vector<Card> cards_;
  std::vector<CardClass> classes_;
};

// G - v: vertex removed, vertices above v shift down by one.
inline Graph VertexDeleted(const Graph& g, Vertex v) {
  g.CheckVertex(v);
  std::vector<Pair> kept;
  for (const Pair& p : g.edges()) {
    if (p.u == v || p.v == v) continue;
    kept.push_back(Pair{p.u > v ? p.u - 1 : p.u, p.v > v ? p.v - 1 : p.v});
  }
  return Graph(g.n() - 1, EdgeSet::FromNormalized(std::move(kept)));
}

// Inverse of VertexDeleted for an isolated vertex: inserts a fresh isolated
// vertex at position v.
inline Graph InsertIsolatedVertex(const Graph& g, Vertex v) {
  if (v > g.n()) g.CheckVertex(v);
  std::vector<Pair> shifted;
  for (const Pair& p : g.edges()) {
    shifted.push_back(Pair{p.u >= v ? p.u + 1 : p.u, p.v >= v ? p.v + 1 : p.v});
  }
  return Graph(g.n() + 1, EdgeSet::FromNormalized(std::move(shifted)));
}

inline std::vector<Vertex> IsolatedVertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.Degree(v) == 0) out.push_back(v);
  }
  return out;
}

inline Deck ClassicDeck(const Graph& g) {
  if (g.n() < 2) throw Error(Errc::kPreconditionViolated, "deck needs n >= 2");
  std::vector<Card> cards;
  for (Vertex v = 0; v < g.n(); ++v) cards.push_back({VertexDeleted(g, v), v});
  return Deck(DeckKind::kClassic, std::move(cards));
}

inline Deck AugmentedDeck(const Graph& g) {
  if (g.n() < 2) throw Error(Errc::kPreconditionViolated, "deck needs n >= 2");
  std::vector<Card> cards;
  for (Vertex v = 0; v < g.n(); ++v) cards.push_back({DeleteEdges(g, IncidentEdges(g, v)), v});
  return Deck(DeckKind::kAugmented, std::move(cards));
}

// Classic -> augmented by adding a singleton vertex (at the origin position
// when known, otherwise at the end).
inline Deck Augment(const Deck& deck) {
  if (deck.kind() == DeckKind::kAugmented) return deck;
  std::vector<Card> cards;
  for (const Card& c : deck.cards()) {
    const Vertex at = c.origin.value_or(c.graph.n());
    cards.push_back({InsertIsolatedVertex(c.graph, at), c.origin});
  }
  return Deck(DeckKind::kAugmented, std::move(cards));
}

// Augmented -> classic by removing the origin (or, blind, any isolated vertex:
// all choices give isomorphic cards).
inline Deck Strip(const Deck& deck) {
  if (deck.kind() == DeckKind::kClassic) return deck;
  std::vector<Card> cards;
  for (const Card& c : deck.cards()) {
    Vertex at = 0;
    if (c.origin) {
      at = *c.origin;
    } else {
      const auto isolated = IsolatedVertices(c.graph);
      if (isolated.empty()) {
        throw Error(Errc::kPreconditionViolated, "augmented card without an isolated vertex");
      }
      at = isolated.front();
    }
    if (c.graph.Degree(at) != 0) {
      throw Error(Errc::kPreconditionViolated, "origin vertex is not isolated in its card");
    }
    cards.push_back({VertexDeleted(c.graph, at), c.origin});
  }
  return Deck(DeckKind::kClassic, std::move(cards));
}

// Every edge of G survives in exactly n - 2 cards, so m(G) = sum m(card) / (n - 2).
inline std::uint64_t KellyEdgeCount(const Deck& deck) {
  const Vertex n = deck.SourceVertexCount();
  if (n < 3) throw Error(Errc::kPreconditionViolated, "edge count needs n >= 3");
  if (deck.cards().size() != n) {
    throw Error(Errc::kPreconditionViolated, "deck has " + std::to_string(deck.cards().size()) +
                                                 " cards for n=" + std::to_string(n));
  }
  std::uint64_t total = 0;
  for (const Card& c : deck.cards()) total += c.graph.m();
  if (total % (n - 2) != 0) {
    throw Error(Errc::kNotDivisible, "card edge total " + std::to_string(total) +
                                         " not divisible by n-2=" + std::to_string(n - 2));
  }
  return total / (n - 2);
}

inline void CheckReconstructionScope(const Graph& g) {
  if (g.n() < 3) throw Error(Errc::kPreconditionViolated, "graph needs n >= 3");
  if (!IsConnected(g)) throw Error(Errc::kPreconditionViolated, "graph must be connected");
}

// |AO_G(e_G(v))| = |AO_G(v)| for every vertex.
inline bool CheckVertexEdgeOrbitIdentity(const Graph& g) {
  CheckReconstructionScope(g);
  const PermGroup aut = AutomorphismGroup(g);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (EdgeSetOrbitSize(aut, IncidentEdges(g, v)) != VertexOrbit(aut, v).size()) {
      return false;
    }
  }
  return true;
}

// |Aut(G)| = |Aut(G')| * M(G') / |AO_{G'}(e_G(v))|, with the restored incident
// set taken as non-edges of the card.
inline BigInt RecoverAutOrder(const Graph& card, std::uint64_t multiplicity,
                              const EdgeSet& restored) {
  for (const Pair& p : restored) {
    card.CheckVertex(p.v);
    if (card.HasEdge(p)) {
      throw Error(Errc::kPreconditionViolated, "restored pair is already an edge of the card");
    }
  }
  const PermGroup aut = AutomorphismGroup(card);
  const std::uint64_t orbit = EdgeSetOrbitSize(aut, restored);
  return ExactDivide(aut.order() * multiplicity, BigInt(orbit), "|Aut(G')| * M / |AO|");
}

enum class OriginMode {
  kStrictIsolated,  // the added vertex is one of the card's isolated vertices
  kAllVertices,     // any vertex with room for the missing degree
};

struct ExtensionClass {
  EdgeSet representative;           // smallest candidate in the orbit
  std::uint64_t orbit_size = 0;     // |AO_{G_i}(E_i)|
  std::uint64_t candidates = 0;     // candidates that fell in this orbit
  BigRational ratio;                // M(G_i) |Aut(G_i)| / |AO_{G_i}(E_i)|
  Certificate extended;             // certificate of G_i + E_i
  BigInt extended_aut;              // |Aut(G_i + E_i)|
  bool consistent = false;          // extended_aut == ratio
};

struct CardAnalysis {
  Certificate card;
  std::uint64_t multiplicity = 0;
  BigInt card_aut;
  std::uint64_t missing_degree = 0;
  std::vector<Vertex> origins;  // vertices tried as the re-added vertex
  std::vector<ExtensionClass> classes;
};

struct FilterReport {
  Vertex n = 0;
  std::uint64_t edge_count = 0;
  OriginMode mode = OriginMode::kStrictIsolated;
  std::vector<CardAnalysis> cards;
  // Ratios attained by a consistent class on every card whose extensions
  // agree on one certificate, with that certificate.
  std::vector<std::pair<BigRational, Certificate>> matches;
  // Exactly one match, and on every card exactly one orbit class attains it.
  bool unique = false;
  // Ratio matching alone (no consistency or certificate agreement).
  bool literal_unique = false;
  std::optional<Graph> reconstruction;
  bool reconstruction_matches_deck = false;
};

namespace recon_internal {

inline void ForEachCombination(std::size_t n, std::size_t k,
                               const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline CardAnalysis AnalyzeCard(const Graph& card, std::uint64_t multiplicity,
                                std::uint64_t missing, OriginMode mode) {
  CardAnalysis out;
  out.multiplicity = multiplicity;
  out.missing_degree = missing;
  const AutomorphismInfo info = AnalyzeAutomorphisms(card);
  out.card = info.certificate;
  out.card_aut = info.group.order();

  for (Vertex u = 0; u < card.n(); ++u) {
    const std::size_t degree = card.Degree(u);
    const bool usable = mode == OriginMode::kStrictIsolated ? degree == 0
                                                            : degree + missing <= card.n() - 1;
    if (usable) out.origins.push_back(u);
  }
  if (out.origins.empty()) {
    throw Error(Errc::kPreconditionViolated, "card has no admissible origin vertex");
  }

  std::set<EdgeSet> candidates;
  for (Vertex u : out.origins) {
    std::vector<Vertex> free;
    for (Vertex w = 0; w < card.n(); ++w) {
      if (w != u && !card.HasEdge(u, w)) free.push_back(w);
    }
    ForEachCombination(free.size(), missing, [&](const std::vector<std::size_t>& pick) {
      std::vector<Pair> pairs;
      for (std::size_t i : pick) pairs.push_back(MakePair(u, free[i]));
      candidates.insert(EdgeSet::FromNormalized(std::move(pairs)));
    });
  }

  std::set<EdgeSet> assigned;
  for (const EdgeSet& candidate : candidates) {
    if (assigned.contains(candidate)) continue;
    const Orbit<EdgeSet> orbit = EdgeSetOrbit(info.group, candidate);
    ExtensionClass cls;
    cls.representative = candidate;
    cls.orbit_size = orbit.size();
    for (const EdgeSet& member : orbit.elements) {
      if (candidates.contains(member)) {
        assigned.insert(member);
        ++cls.candidates;
      }
    }
    cls.ratio = BigRational(out.card_aut * multiplicity, BigInt(cls.orbit_size));
    const AutomorphismInfo extended = AnalyzeAutomorphisms(AddEdges(card, candidate));
    cls.extended = extended.certificate;
    cls.extended_aut = extended.group.order();
    cls.consistent = BigRational(cls.extended_aut) == cls.ratio;
    out.classes.push_back(std::move(cls));
  }
  return out;
}

}  // namespace recon_internal

// Tries to pin G from its augmented deck: for each card class, every way of
// re-attaching the missing edges to one vertex is grouped into automorphism
// orbits of the card, and each orbit gets the value M(G_i) |Aut(G_i)| /
// |AO_{G_i}(E_i)|, which equals |Aut(G)| for the true extension. A value that
// every card attains with exactly one orbit class, consistently with the
// symmetry of the extended graph, certifies a unique reconstruction.
inline FilterReport UniqueExtensionFilter(const Deck& input,
                                          OriginMode mode = OriginMode::kStrictIsolated) {
  const Deck deck = Augment(input);
  FilterReport report;
  report.mode = mode;
  report.n = deck.SourceVertexCount();
  report.edge_count = KellyEdgeCount(deck);

  for (const CardClass& cls : deck.classes()) {
    const Graph& card = deck.Representative(cls);
    if (card.m() >= report.edge_count) {
      throw Error(Errc::kPreconditionViolated,
                  "card misses no edges; the source graph has an isolated vertex");
    }
    report.cards.push_back(recon_internal::AnalyzeCard(card, cls.multiplicity,
                                                       report.edge_count - card.m(), mode));
  }

  // Literal reading: ratios shared by every card, attained by one class each.
  {
    std::optional<std::set<BigRational>> common;
    for (const CardAnalysis& c : report.cards) {
      std::set<BigRational> values;
      for (const ExtensionClass& e : c.classes) values.insert(e.ratio);
      if (!common) {
        common = std::move(values);
      } else {
        std::set<BigRational> kept;
        std::set_intersection(common->begin(), common->end(), values.begin(), values.end(),
                              std::inserter(kept, kept.begin()));
        common = std::move(kept);
      }
    }
    if (common && common->size() == 1) {
      const BigRational& rho = *common->begin();
      report.literal_unique =
          std::all_of(report.cards.begin(), report.cards.end(), [&](const CardAnalysis& c) {
            return std::count_if(c.classes.begin(), c.classes.end(),
                                 [&](const ExtensionClass& e) { return e.ratio == rho; }) == 1;
          });
    }
  }

  // Consistent classes only, with certificate agreement across cards.
  std::map<BigRational, std::set<Certificate>> surviving;
  bool first = true;
  for (const CardAnalysis& c : report.cards) {
    std::map<BigRational, std::set<Certificate>> here;
    for (const ExtensionClass& e : c.classes) {
      if (e.consistent) here[e.ratio].insert(e.extended);
    }
    if (first) {
      surviving = std::move(here);
      first = false;
      continue;
    }
    std::map<BigRational, std::set<Certificate>> kept;
    for (auto& [rho, certs] : surviving) {
      auto it = here.find(rho);
      if (it == here.end()) continue;
      std::set<Certificate> both;
      std::set_intersection(certs.begin(), certs.end(), it->second.begin(), it->second.end(),
                            std::inserter(both, both.begin()));
      if (!both.empty()) kept.emplace(rho, std::move(both));
    }
    surviving = std::move(kept);
  }
  for (const auto& [rho, certs] : surviving) {
    for (const Certificate& c : certs) report.matches.emplace_back(rho, c);
  }

  if (report.matches.size() == 1) {
    const auto& [rho, cert] = report.matches.front();
    report.unique =
        std::all_of(report.cards.begin(), report.cards.end(), [&](const CardAnalysis& c) {
          return std::count_if(c.classes.begin(), c.classes.end(), [&](const ExtensionClass& e) {
                   return e.consistent && e.ratio == rho;
                 }) == 1;
        });
    if (report.unique) {
      const CardAnalysis& c = report.cards.front();
      for (const ExtensionClass& e : c.classes) {
        if (e.consistent && e.ratio == rho) {
          report.reconstruction =
              AddEdges(deck.Representative(deck.classes().front()), e.representative);
        }
      }
      report.reconstruction_matches_deck =
          AugmentedDeck(*report.reconstruction).SameMultiset(deck);
    }
  }
  return report;
}

// One representative (first in mask order) per isomorphism class of connected
// graphs on n vertices.
inline std::vector<Graph> ConnectedClassRepresentatives(Vertex n) {
  std::vector<Graph> out;
  std::set<Certificate> seen;
  ForEachLabeledGraph(n, [&](const Graph& g, std::uint64_t) {
    if (!IsConnected(g)) return;
    if (seen.insert(CanonicalForm(g)).second) out.push_back(g);
  });
  return out;
}

struct FilterSweepSummary {
  Vertex n = 0;
  OriginMode mode = OriginMode::kStrictIsolated;
  std::uint64_t classes = 0;
  std::uint64_t unique = 0;          // filter certified one reconstruction
  std::uint64_t literal_unique = 0;  // ratio matching alone certified it
  std::uint64_t correct = 0;         // certified reconstruction is the source graph
  std::vector<std::string> uncertified;  // graph6 of classes left ambiguous
};

// Runs the filter on the blind augmented deck of every connected class.
inline FilterSweepSummary SweepUniqueExtensionFilter(Vertex n,
                                                     OriginMode mode = OriginMode::kStrictIsolated,
                                                     unsigned threads = 1) {
  if (n < 3) throw Error(Errc::kPreconditionViolated, "filter sweep needs n >= 3");
  const std::vector<Graph> graphs = ConnectedClassRepresentatives(n);
  std::vector<FilterReport> reports(graphs.size());
  ParallelFor(graphs.size(), threads, [&](std::uint64_t i, unsigned) {
    reports[i] = UniqueExtensionFilter(AugmentedDeck(graphs[i]).Blind(), mode);
  });
  FilterSweepSummary summary;
  summary.n = n;
  summary.mode = mode;
  summary.classes = graphs.size();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const FilterReport& r = reports[i];
    if (r.literal_unique) ++summary.literal_unique;
    if (r.unique) {
      ++summary.unique;
      if (CanonicalForm(*r.reconstruction) == CanonicalForm(graphs[i])) ++summary.correct;
    } else {
      summary.uncertified.push_back(EmitGraph6(graphs[i]));
    }
  }
  return summary;
}

}  // namespace symratio

#endif  // SYMRATIO_RECONSTRUCTION_HPP_
