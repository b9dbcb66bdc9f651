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

#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symratio.hpp"

namespace symratio::cli {
namespace {

using nlohmann::json;

// Input problems raised by the CLI itself (as opposed to library Errors).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json ToJson(const BigRational& q) {
  return {{"numerator", boost::multiprecision::numerator(q).str()},
          {"denominator", boost::multiprecision::denominator(q).str()}};
}

json ToJson(const EdgeSet& s) {
  json out = json::array();
  for (const Pair& p : s) out.push_back({p.u, p.v});
  return out;
}

json ToJson(const Perm& f) {
  json out = json::array();
  for (Vertex x : f.images()) out.push_back(x);
  return out;
}

json ToJson(const IdentityReport& r) {
  return {{"autG", r.aut_g.str()},
          {"aoG", r.ao_g},
          {"autGminus", r.aut_g_minus.str()},
          {"aoGminus", r.ao_g_minus},
          {"lhs_cross", r.lhs_cross.str()},
          {"rhs_cross", r.rhs_cross.str()},
          {"holds", r.holds},
          {"ratio", ToJson(r.ratio)}};
}

std::string Trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Vertex names from --labels, e.g. "a,b,c" makes a=0, b=1, c=2.
struct Labels {
  std::vector<std::string> names;

  Vertex Resolve(const std::string& token) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == token) return static_cast<Vertex>(i);
    }
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("unknown vertex '" + token + "'");
    }
    return static_cast<Vertex>(std::stoul(token));
  }
};

Labels ParseLabels(const std::string& text) {
  Labels labels;
  if (text.empty()) return labels;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) labels.names.push_back(Trim(item));
  return labels;
}

Pair ParsePairToken(const std::string& token, const Labels& labels) {
  const auto dash = token.find('-');
  if (dash == std::string::npos) throw UsageError("pair '" + token + "' is not of the form u-v");
  return MakePair(labels.Resolve(Trim(token.substr(0, dash))),
                  labels.Resolve(Trim(token.substr(dash + 1))));
}

// "u-v,u-v,..."
EdgeSet ParseEdgeFlag(const std::string& text, const Labels& labels) {
  std::vector<Pair> pairs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    if (!item.empty()) pairs.push_back(ParsePairToken(item, labels));
  }
  return EdgeSet::FromNormalized(std::move(pairs));
}

// A graph6 string, or a path to a file holding graph6 or an edge list
// (sniffed: a first line of two integers means edge list).
Graph LoadGraph(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream file(spec);
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string content = buffer.str();
    std::istringstream lines(content);
    std::string first;
    while (std::getline(lines, first) && Trim(first).empty()) {}
    std::istringstream header(first);
    long long a = 0, b = 0;
    std::string extra;
    if ((header >> a >> b) && !(header >> extra)) return ParseEdgeList(content);
    return ParseGraph6(Trim(first));
  }
  return ParseGraph6(Trim(spec));
}

json GraphJson(const Graph& g) {
  return {{"n", g.n()}, {"m", g.m()}, {"graph6", EmitGraph6(g)}};
}

struct Context {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  bool check_failed = false;
};

struct GraphArgs {
  std::string graph;
  std::string labels;

  void Register(CLI::App* app, bool required = true) {
    auto* opt = app->add_option("--graph,--graph6", graph,
                                "graph6 string, or file with graph6 / edge list");
    if (required) opt->required();
    app->add_option("--labels", labels, "comma-separated vertex names for 0..n-1");
  }
};

void RunAut(Context& ctx, const GraphArgs& args, bool oracle) {
  const Graph g = LoadGraph(args.graph);
  ctx.inputs["graph"] = GraphJson(g);
  const AutomorphismInfo info = AnalyzeAutomorphisms(g);
  json gens = json::array();
  for (const Perm& f : info.group.generators()) gens.push_back(ToJson(f));
  const auto roots = VertexOrbitRoots(g.n(), info.group.generators());
  std::map<Vertex, std::vector<Vertex>> orbits;
  for (Vertex v = 0; v < g.n(); ++v) orbits[roots[v]].push_back(v);
  json orbit_list = json::array();
  for (const auto& [root, members] : orbits) orbit_list.push_back(members);
  ctx.results = {{"order", info.group.order().str()},
                 {"generators", gens},
                 {"vertex_orbits", orbit_list},
                 {"certificate", info.certificate.Hex()}};
  if (oracle) {
    const BigInt brute = BruteForceAut(g).order();
    ctx.results["oracle_order"] = brute.str();
    if (brute != info.group.order()) ctx.check_failed = true;
  }
}

void RunOrbit(Context& ctx, const GraphArgs& args, const std::optional<std::string>& vertex,
              const std::optional<std::string>& pair, const std::optional<std::string>& edges) {
  const int chosen = (vertex ? 1 : 0) + (pair ? 1 : 0) + (edges ? 1 : 0);
  if (chosen != 1) throw UsageError("orbit needs exactly one of --vertex, --pair, --edges");
  const Graph g = LoadGraph(args.graph);
  const Labels labels = ParseLabels(args.labels);
  ctx.inputs["graph"] = GraphJson(g);
  const PermGroup aut = AutomorphismGroup(g);
  ctx.results["group_order"] = aut.order().str();
  if (vertex) {
    const Vertex v = labels.Resolve(*vertex);
    g.CheckVertex(v);
    const auto orbit = VertexOrbit(aut, v);
    ctx.inputs["vertex"] = v;
    ctx.results["kind"] = "vertex";
    ctx.results["size"] = orbit.size();
    ctx.results["elements"] = orbit.elements;
  } else if (pair) {
    const Pair p = ParsePairToken(*pair, labels);
    g.CheckVertex(p.v);
    const auto orbit = PairOrbit(aut, p);
    ctx.inputs["pair"] = {p.u, p.v};
    ctx.results["kind"] = "pair";
    ctx.results["size"] = orbit.size();
    json elements = json::array();
    for (const Pair& q : orbit.elements) elements.push_back({q.u, q.v});
    ctx.results["elements"] = elements;
  } else {
    const EdgeSet set = ParseEdgeFlag(*edges, labels);
    if (set.VertexBound() > g.n()) g.CheckVertex(set.VertexBound() - 1);
    const auto orbit = EdgeSetOrbit(aut, set);
    ctx.inputs["edges"] = ToJson(set);
    ctx.results["kind"] = "pair-set";
    ctx.results["size"] = orbit.size();
    json elements = json::array();
    for (const EdgeSet& s : orbit.elements) elements.push_back(ToJson(s));
    ctx.results["elements"] = elements;
  }
}

void RunVerify(Context& ctx, const GraphArgs& args, const std::string& edges) {
  const Graph g = LoadGraph(args.graph);
  const EdgeSet removed = ParseEdgeFlag(edges, ParseLabels(args.labels));
  ctx.inputs["graph"] = GraphJson(g);
  ctx.inputs["edges"] = ToJson(removed);
  const IdentityReport r = VerifyRatioIdentity(g, removed);
  ctx.results = ToJson(r);
  ctx.check_failed = !r.holds;
}

std::string EdgesCell(const EdgeSet& s) {
  std::string out;
  for (const Pair& p : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p.u) + "-" + std::to_string(p.v);
  }
  return out;
}

struct SweepArgs {
  unsigned n = 0;
  std::string subsets = "single";
  unsigned samples = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t random_graphs = 0;
  unsigned threads = 1;
  std::string csv;
};

void RunSweep(Context& ctx, const SweepArgs& args) {
  const bool random_needed = args.samples > 0 || args.random_graphs > 0 || args.subsets == "random";
  if (random_needed && !args.seed) throw UsageError("randomized sweeps require --seed");
  if (args.subsets == "random" && args.samples == 0) {
    throw UsageError("--subsets random needs --samples K > 0");
  }
  SweepOptions options{.threads = args.threads, .keep_rows = !args.csv.empty()};
  ctx.inputs = {{"n", args.n}, {"subsets", args.subsets}, {"samples", args.samples},
                {"threads", args.threads}};
  if (args.seed) ctx.inputs["seed"] = *args.seed;
  SweepSummary summary;
  if (args.random_graphs > 0) {
    ctx.inputs["random_graphs"] = args.random_graphs;
    summary = SweepRandomGraphs(args.n, args.random_graphs, args.samples, *args.seed, options);
  } else {
    SubsetPolicy policy;
    policy.single_edges = args.subsets == "single";
    policy.all_subsets = args.subsets == "all";
    policy.random_samples = args.samples;
    policy.seed = args.seed.value_or(0);
    summary = SweepVerify(args.n, policy, options);
  }
  ctx.results = {{"graphs", summary.graphs},
                 {"checks", summary.checks},
                 {"violations", summary.violations}};
  if (summary.first_violation) {
    ctx.results["first_violation"] = {{"graph6", summary.first_violation->graph6},
                                      {"edges", ToJson(summary.first_violation->removed)},
                                      {"report", ToJson(summary.first_violation->report)}};
  }
  if (!args.csv.empty()) {
    std::ofstream csv(args.csv);
    if (!csv) throw UsageError("cannot write " + args.csv);
    csv << "graph6,edges,autG,aoG,autGminus,aoGminus,ratio,holds\n";
    for (const SweepCheck& row : summary.rows) {
      csv << row.graph6 << ',' << EdgesCell(row.removed) << ',' << row.report.aut_g << ','
          << row.report.ao_g << ',' << row.report.aut_g_minus << ',' << row.report.ao_g_minus
          << ',' << ToString(row.report.ratio) << ',' << (row.report.holds ? 1 : 0) << '\n';
    }
    ctx.results["csv_rows"] = summary.rows.size();
  }
  ctx.check_failed = summary.violations != 0;
}

void RunErProb(Context& ctx, const GraphArgs& args) {
  const Graph g = LoadGraph(args.graph);
  ctx.inputs["graph"] = GraphJson(g);
  const BigInt aut = AutomorphismGroup(g).order();
  ctx.results = {{"aut_order", aut.str()},
                 {"labeled_copies", CountLabeledCopies(g, aut).str()},
                 {"edge_sets", Binomial(PairCount(g.n()), g.m()).str()},
                 {"probability", ToJson(ErProbIsomorphic(g, aut))}};
}

void RunErSample(Context& ctx, const GraphArgs& args, std::uint64_t trials,
                 std::optional<std::uint64_t> seed, unsigned threads) {
  if (!seed) throw UsageError("er-sample requires --seed");
  const Graph g = LoadGraph(args.graph);
  ctx.inputs = {{"graph", GraphJson(g)}, {"trials", trials}, {"seed", *seed}, {"threads", threads}};
  const BigRational exact = ErProbIsomorphic(g);
  const SampleEstimate est = EstimateProbIsomorphic(g, trials, *seed, threads);
  const double p = exact.convert_to<double>();
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  const double deviation = std::abs(est.estimate - p);
  const bool within = sigma == 0.0 ? est.estimate == p : deviation <= 6.0 * sigma;
  ctx.results = {{"exact", ToJson(exact)},
                 {"trials", est.trials},
                 {"hits", est.hits},
                 {"estimate", est.estimate},
                 {"ci95_halfwidth", est.ci95_halfwidth},
                 {"deviation", deviation},
                 {"within_6_sigma", within}};
  ctx.check_failed = !within;
}

void RunCheckCancel(Context& ctx, unsigned nmax) {
  if (nmax < 2) throw UsageError("--nmax must be >= 2");
  ctx.inputs["nmax"] = nmax;
  std::uint64_t checked = 0, failures = 0;
  json first_failure;
  for (std::uint64_t n = 2; n <= nmax; ++n) {
    for (std::uint64_t m = 1; m <= PairCount(n); ++m) {
      for (std::uint64_t k = 1; k <= m; ++k) {
        ++checked;
        if (!VerifyBinomialCancellation(n, m, k)) {
          if (failures++ == 0) first_failure = {{"n", n}, {"m", m}, {"k", k}};
        }
      }
    }
  }
  ctx.results = {{"checked", checked}, {"failures", failures}};
  if (failures) ctx.results["first_failure"] = first_failure;
  ctx.check_failed = failures != 0;
}

void RunProofChain(Context& ctx, const GraphArgs& args, const std::string& edges) {
  const Graph g = LoadGraph(args.graph);
  const EdgeSet removed = ParseEdgeFlag(edges, ParseLabels(args.labels));
  ctx.inputs = {{"graph", GraphJson(g)}, {"edges", ToJson(removed)}};
  const ProofChainReport r = VerifyProofChain(g, removed);
  json equations = json::array();
  for (const EquationCheck& e : r.equations) {
    equations.push_back(
        {{"name", e.name}, {"lhs", ToJson(e.lhs)}, {"rhs", ToJson(e.rhs)}, {"holds", e.holds}});
  }
  ctx.results = {{"n", r.n},
                 {"m", r.m},
                 {"k", r.k},
                 {"trivial_case", r.trivial_case},
                 {"quantities", ToJson(r.quantities)},
                 {"equations", equations},
                 {"all_hold", r.all_hold}};
  ctx.check_failed = !r.all_hold;
}

json DeckJson(const Deck& deck, bool with_origins) {
  json cards = json::array();
  for (const CardClass& cls : deck.classes()) {
    json card = {{"graph6", EmitGraph6(deck.Representative(cls))},
                 {"multiplicity", cls.multiplicity}};
    if (with_origins) {
      json origins = json::array();
      for (const Card& c : deck.cards()) {
        if (c.origin && CanonicalForm(c.graph) == cls.certificate) origins.push_back(*c.origin);
      }
      card["origins"] = origins;
    }
    cards.push_back(card);
  }
  return cards;
}

Deck LoadDeck(const std::string& path, bool classic) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read deck file " + path);
  json doc;
  try {
    doc = json::parse(file);
  } catch (const json::exception& e) {
    throw UsageError(std::string("deck file is not JSON: ") + e.what());
  }
  const json& list = doc.is_object() && doc.contains("deck") ? doc["deck"] : doc;
  if (!list.is_array()) throw UsageError("deck must be a JSON list of {graph6, multiplicity}");
  std::vector<Card> cards;
  try {
    for (const json& entry : list) {
      const Graph g = ParseGraph6(entry.at("graph6").get<std::string>());
      const auto count = entry.at("multiplicity").get<std::uint64_t>();
      for (std::uint64_t i = 0; i < count; ++i) cards.push_back({g, std::nullopt});
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad deck entry: ") + e.what());
  }
  if (cards.empty()) throw UsageError("deck is empty");
  return Deck(classic ? DeckKind::kClassic : DeckKind::kAugmented, std::move(cards));
}

void RunDeck(Context& ctx, const GraphArgs& args, bool classic, bool blind) {
  const Graph g = LoadGraph(args.graph);
  ctx.inputs = {{"graph", GraphJson(g)}, {"classic", classic}, {"blind", blind}};
  const Deck deck = classic ? ClassicDeck(g) : AugmentedDeck(g);
  ctx.results = {{"kind", classic ? "classic" : "augmented"},
                 {"cards", deck.cards().size()},
                 {"deck", DeckJson(deck, !blind)}};
  if (g.n() >= 3) ctx.results["edge_count"] = KellyEdgeCount(deck);
}

void RunRecoverAut(Context& ctx, const GraphArgs& args, const std::optional<std::string>& vertex) {
  const Graph g = LoadGraph(args.graph);
  ctx.inputs["graph"] = GraphJson(g);
  CheckReconstructionScope(g);
  const BigInt actual = AutomorphismGroup(g).order();
  const Deck deck = AugmentedDeck(g);
  std::vector<Vertex> targets;
  if (vertex) {
    const Vertex v = ParseLabels(args.labels).Resolve(*vertex);
    g.CheckVertex(v);
    targets.push_back(v);
    ctx.inputs["vertex"] = v;
  } else {
    for (Vertex v = 0; v < g.n(); ++v) targets.push_back(v);
  }
  json rows = json::array();
  bool all_match = true;
  for (Vertex v : targets) {
    const Graph& card = deck.cards()[v].graph;
    const EdgeSet restored = IncidentEdges(g, v);
    const std::uint64_t multiplicity = deck.Multiplicity(card);
    const PermGroup card_aut = AutomorphismGroup(card);
    const BigInt recovered = RecoverAutOrder(card, multiplicity, restored);
    all_match = all_match && recovered == actual;
    rows.push_back({{"vertex", v},
                    {"card", EmitGraph6(card)},
                    {"multiplicity", multiplicity},
                    {"restored", ToJson(restored)},
                    {"card_aut", card_aut.order().str()},
                    {"restored_orbit", EdgeSetOrbit(card_aut, restored).size()},
                    {"recovered", recovered.str()}});
  }
  ctx.results = {{"actual", actual.str()}, {"cards", rows}, {"all_match", all_match}};
  ctx.check_failed = !all_match;
}

json FilterJson(const FilterReport& r) {
  json cards = json::array();
  for (const CardAnalysis& c : r.cards) {
    json classes = json::array();
    for (const ExtensionClass& e : c.classes) {
      classes.push_back({{"edges", ToJson(e.representative)},
                         {"orbit_size", e.orbit_size},
                         {"candidates", e.candidates},
                         {"ratio", ToJson(e.ratio)},
                         {"extended_certificate", e.extended.Hex()},
                         {"extended_aut", e.extended_aut.str()},
                         {"consistent", e.consistent}});
    }
    cards.push_back({{"certificate", c.card.Hex()},
                     {"multiplicity", c.multiplicity},
                     {"card_aut", c.card_aut.str()},
                     {"missing_degree", c.missing_degree},
                     {"origins", c.origins},
                     {"classes", classes}});
  }
  json matches = json::array();
  for (const auto& [rho, cert] : r.matches) {
    matches.push_back({{"ratio", ToJson(rho)}, {"certificate", cert.Hex()}});
  }
  json out = {{"n", r.n},
              {"edge_count", r.edge_count},
              {"mode", r.mode == OriginMode::kStrictIsolated ? "strict" : "all"},
              {"cards", cards},
              {"matches", matches},
              {"unique", r.unique},
              {"literal_unique", r.literal_unique}};
  if (r.reconstruction) {
    out["reconstruction"] = GraphJson(*r.reconstruction);
    out["reconstruction_certificate"] = CanonicalForm(*r.reconstruction).Hex();
    out["reconstruction_matches_deck"] = r.reconstruction_matches_deck;
  }
  return out;
}

struct FilterArgs {
  GraphArgs graph;
  std::string deck;
  bool classic = false;
  bool blind = false;
  std::string mode = "strict";
  unsigned sweep = 0;
  unsigned threads = 1;
};

void RunReconFilter(Context& ctx, const FilterArgs& args) {
  const OriginMode mode =
      args.mode == "all" ? OriginMode::kAllVertices : OriginMode::kStrictIsolated;
  ctx.inputs = {{"mode", args.mode}, {"blind", true}};
  if (args.sweep > 0) {
    ctx.inputs["sweep"] = args.sweep;
    ctx.inputs["threads"] = args.threads;
    const FilterSweepSummary s = SweepUniqueExtensionFilter(args.sweep, mode, args.threads);
    ctx.results = {{"classes", s.classes},
                   {"unique", s.unique},
                   {"literal_unique", s.literal_unique},
                   {"correct", s.correct},
                   {"unique_fraction", s.classes ? static_cast<double>(s.unique) / s.classes : 0.0},
                   {"literal_unique_fraction",
                    s.classes ? static_cast<double>(s.literal_unique) / s.classes : 0.0},
                   {"uncertified", s.uncertified}};
    ctx.check_failed = s.correct != s.unique;
    return;
  }
  const bool from_graph = !args.graph.graph.empty();
  if (from_graph == !args.deck.empty()) throw UsageError("recon-filter needs --graph or --deck");
  Deck deck;
  std::optional<Certificate> source;
  if (from_graph) {
    const Graph g = LoadGraph(args.graph.graph);
    ctx.inputs["graph"] = GraphJson(g);
    CheckReconstructionScope(g);
    deck = AugmentedDeck(g).Blind();
    source = CanonicalForm(g);
  } else {
    ctx.inputs["deck"] = args.deck;
    deck = LoadDeck(args.deck, args.classic);
  }
  const FilterReport r = UniqueExtensionFilter(deck, mode);
  ctx.results = FilterJson(r);
  if (source && r.reconstruction) {
    const bool same = CanonicalForm(*r.reconstruction) == *source;
    ctx.results["matches_source"] = same;
    ctx.check_failed = !same;
  }
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph automorphism groups, edge-set orbits and the symmetry ratio identity"};
  app.require_subcommand(1);
  Context ctx;
  std::function<void()> action;

  GraphArgs aut_graph;
  bool aut_oracle = false;
  auto* aut = app.add_subcommand("aut", "automorphism group, orbits and certificate");
  aut_graph.Register(aut);
  aut->add_flag("--oracle", aut_oracle, "cross-check the order by brute force (n <= 8)");
  aut->callback([&] { action = [&] { RunAut(ctx, aut_graph, aut_oracle); }; });

  GraphArgs orbit_graph;
  std::optional<std::string> orbit_vertex, orbit_pair, orbit_edges;
  auto* orbit = app.add_subcommand("orbit", "automorphism orbit of a vertex, pair or pair set");
  orbit_graph.Register(orbit);
  orbit->add_option("--vertex", orbit_vertex);
  orbit->add_option("--pair", orbit_pair, "u-v");
  orbit->add_option("--edges", orbit_edges, "u-v,u-v,...");
  orbit->callback([&] {
    action = [&] { RunOrbit(ctx, orbit_graph, orbit_vertex, orbit_pair, orbit_edges); };
  });

  GraphArgs verify_graph;
  std::string verify_edges;
  auto* verify = app.add_subcommand("verify", "check the ratio identity for one (G, E')");
  verify_graph.Register(verify);
  verify->add_option("--edges", verify_edges, "u-v,u-v,...")->required();
  verify->callback([&] { action = [&] { RunVerify(ctx, verify_graph, verify_edges); }; });

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "check the identity over many graphs");
  sweep->add_option("--n", sweep_args.n)->required();
  sweep->add_option("--subsets", sweep_args.subsets)
      ->check(CLI::IsMember({"single", "all", "random"}));
  sweep->add_option("--samples", sweep_args.samples, "random nonempty subsets per graph");
  sweep->add_option("--seed", sweep_args.seed);
  sweep->add_option("--random-graphs", sweep_args.random_graphs,
                    "sample this many G(n,m) graphs instead of enumerating");
  sweep->add_option("--threads", sweep_args.threads);
  sweep->add_option("--csv", sweep_args.csv, "per-check table");
  sweep->callback([&] { action = [&] { RunSweep(ctx, sweep_args); }; });

  GraphArgs prob_graph;
  auto* prob = app.add_subcommand("er-prob", "exact P(H isomorphic to G) under G(n,m)");
  prob_graph.Register(prob);
  prob->callback([&] { action = [&] { RunErProb(ctx, prob_graph); }; });

  GraphArgs sample_graph;
  std::uint64_t sample_trials = 100000;
  std::optional<std::uint64_t> sample_seed;
  unsigned sample_threads = 1;
  auto* sample = app.add_subcommand("er-sample", "Monte Carlo estimate of the same probability");
  sample_graph.Register(sample);
  sample->add_option("--trials", sample_trials);
  sample->add_option("--seed", sample_seed);
  sample->add_option("--threads", sample_threads);
  sample->callback([&] {
    action = [&] { RunErSample(ctx, sample_graph, sample_trials, sample_seed, sample_threads); };
  });

  unsigned cancel_nmax = 12;
  auto* cancel = app.add_subcommand("er-check-cancel", "binomial cancellation for all n <= nmax");
  cancel->add_option("--nmax", cancel_nmax);
  cancel->callback([&] { action = [&] { RunCheckCancel(ctx, cancel_nmax); }; });

  GraphArgs chain_graph;
  std::string chain_edges;
  auto* chain = app.add_subcommand("proof-chain", "evaluate the probability chain exactly");
  chain_graph.Register(chain);
  chain->add_option("--edges", chain_edges, "u-v,u-v,...")->required();
  chain->callback([&] { action = [&] { RunProofChain(ctx, chain_graph, chain_edges); }; });

  GraphArgs deck_graph;
  bool deck_classic = false, deck_blind = false;
  auto* deck = app.add_subcommand("deck", "augmented (default) or classic deck");
  deck_graph.Register(deck);
  deck->add_flag("--classic", deck_classic);
  deck->add_flag("--blind", deck_blind, "omit origin vertices");
  deck->callback([&] { action = [&] { RunDeck(ctx, deck_graph, deck_classic, deck_blind); }; });

  GraphArgs recover_graph;
  std::optional<std::string> recover_vertex;
  auto* recover = app.add_subcommand("recover-aut", "|Aut(G)| from each card and its multiplicity");
  recover_graph.Register(recover);
  recover->add_option("--vertex", recover_vertex);
  recover->callback([&] { action = [&] { RunRecoverAut(ctx, recover_graph, recover_vertex); }; });

  FilterArgs filter_args;
  auto* filter = app.add_subcommand("recon-filter", "equal-ratio unique-extension filter");
  filter_args.graph.Register(filter, /*required=*/false);
  filter->add_option("--deck", filter_args.deck, "JSON deck file");
  filter->add_flag("--classic", filter_args.classic, "deck file holds classic cards");
  filter->add_flag("--blind", filter_args.blind, "origins hidden (always the case)");
  filter->add_option("--mode", filter_args.mode)->check(CLI::IsMember({"strict", "all"}));
  filter->add_option("--sweep", filter_args.sweep, "run on every connected graph with this n");
  filter->add_option("--threads", filter_args.threads);
  filter->callback([&] { action = [&] { RunReconFilter(ctx, filter_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  ctx.command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  try {
    action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  json report = {{"command", ctx.command},
                 {"inputs", ctx.inputs},
                 {"results", ctx.results},
                 {"timing_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
  out << report.dump(2) << '\n';
  if (ctx.check_failed) {
    err << ctx.command << ": check failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace symratio::cli
