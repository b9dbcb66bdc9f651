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

#ifndef SYMRATIO_ER_MODEL_HPP_
#define SYMRATIO_ER_MODEL_HPP_

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symratio/aut_search.hpp"
#include "symratio/errors.hpp"
#include "symratio/graph.hpp"
#include "symratio/identity.hpp"
#include "symratio/numeric.hpp"
#include "symratio/random.hpp"

namespace symratio {

// n! / |Aut(G)|: the number of distinct labeled edge sets isomorphic to G.
inline BigInt CountLabeledCopies(const Graph& g, const BigInt& aut_order) {
  return ExactDivide(Factorial(g.n()), aut_order, "n!/|Aut(G)|");
}

inline BigInt CountLabeledCopies(const Graph& g) {
  return CountLabeledCopies(g, AutomorphismGroup(g).order());
}

// P(H in [G]) for H ~ G(n, m) with m = |E(G)|:
//   (1 / C(C(n,2), m)) * (n! / |Aut(G)|)
inline BigRational ErProbIsomorphic(const Graph& g, const BigInt& aut_order) {
  return BigRational(CountLabeledCopies(g, aut_order), Binomial(PairCount(g.n()), g.m()));
}

inline BigRational ErProbIsomorphic(const Graph& g) {
  return ErProbIsomorphic(g, AutomorphismGroup(g).order());
}

struct SampleEstimate {
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double estimate = 0.0;
  double ci95_halfwidth = 0.0;  // 1.96 * sqrt(p (1 - p) / trials)
};

inline constexpr std::uint64_t kTrialBlock = 4096;

// Monte Carlo estimate of P(H in [G]). Trials are cut into fixed blocks, each
// with its own seed stream, so the result depends on the seed only.
inline SampleEstimate EstimateProbIsomorphic(const Graph& g, std::uint64_t trials,
                                             std::uint64_t seed, unsigned threads = 1) {
  if (trials == 0) throw Error(Errc::kRangeError, "trials must be >= 1");
  const Certificate target = CanonicalForm(g);
  const std::uint64_t blocks = (trials + kTrialBlock - 1) / kTrialBlock;
  std::vector<std::uint64_t> hits(blocks, 0);
  ParallelFor(blocks, threads, [&](std::uint64_t b, unsigned) {
    Rng rng = StreamRng(seed, b);
    const std::uint64_t begin = b * kTrialBlock;
    const std::uint64_t end = std::min(trials, begin + kTrialBlock);
    for (std::uint64_t t = begin; t < end; ++t) {
      if (CanonicalForm(SampleEr(g.n(), g.m(), rng)) == target) ++hits[b];
    }
  });
  SampleEstimate out;
  out.trials = trials;
  for (std::uint64_t h : hits) out.hits += h;
  out.estimate = static_cast<double>(out.hits) / static_cast<double>(trials);
  out.ci95_halfwidth =
      1.96 * std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(trials));
  return out;
}

struct EquationCheck {
  std::string name;
  BigRational lhs;
  BigRational rhs;
  bool holds = false;
};

// The probability chain behind the ratio identity, evaluated exactly with
// computed automorphism and orbit counts. When E' = E the chain degenerates
// and the direct counting facts are checked instead.
struct ProofChainReport {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t k = 0;
  bool trivial_case = false;
  IdentityReport quantities;
  std::vector<EquationCheck> equations;
  bool all_hold = false;
};

struct BinomialCancellation {
  BigInt a, b, c, d, e, f, g, h;
  bool binomial_identity = false;  // C(N,m) C(m,k) = C(N,m-k) C(N-(m-k),k)
  bool a_eq_cg = false;
  bool b_eq_ed = false;
  bool f_eq_h = false;
  bool ratio_is_one = false;  // adeh = bcfg

  bool all() const { return binomial_identity && a_eq_cg && b_eq_ed && f_eq_h && ratio_is_one; }
};

// Both routes for N = C(n,2): binomials by the multiplicative formula, and the
// falling-factorial products they expand to.
inline BinomialCancellation CheckBinomialCancellation(std::uint64_t n, std::uint64_t m,
                                                      std::uint64_t k) {
  const std::uint64_t pairs = PairCount(n);
  if (k < 1 || k > m || m > pairs) {
    throw Error(Errc::kRangeError, "need 1 <= k <= m <= C(n,2); got n=" + std::to_string(n) +
                                       " m=" + std::to_string(m) + " k=" + std::to_string(k));
  }
  const std::uint64_t kept = m - k;
  BinomialCancellation r;
  r.binomial_identity = Binomial(pairs, m) * Binomial(m, k) ==
                        Binomial(pairs, kept) * Binomial(pairs - kept, k);
  r.a = FallingFactorial(pairs, m);
  r.b = Factorial(m);
  r.c = FallingFactorial(pairs, kept);
  r.d = Factorial(kept);
  r.e = FallingFactorial(m, k);
  r.f = Factorial(k);
  r.g = FallingFactorial(pairs - kept, k);
  r.h = Factorial(k);
  r.a_eq_cg = r.a == r.c * r.g;
  r.b_eq_ed = r.b == r.e * r.d;
  r.f_eq_h = r.f == r.h;
  r.ratio_is_one = r.a * r.d * r.e * r.h == r.b * r.c * r.f * r.g;
  return r;
}

inline bool VerifyBinomialCancellation(std::uint64_t n, std::uint64_t m, std::uint64_t k) {
  return CheckBinomialCancellation(n, m, k).all();
}

namespace er_internal {

inline EquationCheck Equation(std::string name, BigRational lhs, BigRational rhs) {
  const bool holds = lhs == rhs;
  return {std::move(name), std::move(lhs), std::move(rhs), holds};
}

inline BigRational Q(const BigInt& num, const BigInt& den = 1) { return BigRational(num, den); }

}  // namespace er_internal

inline ProofChainReport VerifyProofChain(const Graph& g, const EdgeSet& removed) {
  using er_internal::Equation;
  using er_internal::Q;
  CheckRemovable(g, removed);
  const Graph minus = DeleteEdges(g, removed);

  ProofChainReport r;
  r.n = g.n();
  r.m = g.m();
  r.k = removed.size();
  r.quantities = VerifyRatioIdentity(g, removed);
  const IdentityReport& q = r.quantities;
  const BigInt ao_g(q.ao_g);
  const BigInt ao_minus(q.ao_g_minus);
  const BigInt n_fact = Factorial(r.n);

  if (r.k == r.m) {
    r.trivial_case = true;
    r.equations.push_back(Equation("aut_minus_is_symmetric_group", Q(q.aut_g_minus), Q(n_fact)));
    r.equations.push_back(Equation("edge_orbit_in_g_is_one", Q(ao_g), Q(1)));
    r.equations.push_back(
        Equation("nonedge_orbit_is_labeled_copies", Q(ao_minus), Q(n_fact, q.aut_g)));
  } else {
    const std::uint64_t pairs = PairCount(r.n);
    const std::uint64_t kept = r.m - r.k;
    const BigInt last_k = Binomial(r.m, r.k);                   // C(m, k)
    const BigInt fill_k = Binomial(pairs - kept, r.k);          // C(C(n,2)-(m-k), k)
    const BigRational p_g = ErProbIsomorphic(g, q.aut_g);
    const BigRational p_minus = ErProbIsomorphic(minus, q.aut_g_minus);

    r.equations.push_back(Equation("last_edges_probability", p_g / Q(last_k),
                                   Q(1, ao_g) * Q(ao_minus, fill_k) * p_minus));
    r.equations.push_back(Equation("scaled_by_binomial", p_g,
                                   Q(last_k, ao_g) * Q(ao_minus, fill_k) * p_minus));
    r.equations.push_back(Equation(
        "er_formula_substituted", Q(1, Binomial(pairs, r.m)) * Q(n_fact, q.aut_g),
        Q(last_k, ao_g) * Q(ao_minus, fill_k) * Q(1, Binomial(pairs, kept)) *
            Q(n_fact, q.aut_g_minus)));
    r.equations.push_back(Equation(
        "rearranged", Q(ao_g, q.aut_g),
        Q(Binomial(pairs, r.m), Binomial(pairs, kept)) * Q(last_k, fill_k) *
            Q(ao_minus, q.aut_g_minus)));
    const BinomialCancellation c = CheckBinomialCancellation(r.n, r.m, r.k);
    r.equations.push_back(Equation(
        "falling_factorial_expansion", Q(ao_g, q.aut_g),
        (Q(c.a, c.b) / Q(c.c, c.d)) * (Q(c.e, c.f) / Q(c.g, c.h)) * Q(ao_minus, q.aut_g_minus)));
    r.equations.push_back(Equation("cancellation_adeh_over_bcfg",
                                   Q(c.a * c.d * c.e * c.h, c.b * c.c * c.f * c.g), Q(1)));
  }
  r.all_hold = std::all_of(r.equations.begin(), r.equations.end(),
                           [](const EquationCheck& e) { return e.holds; });
  return r;
}

}  // namespace symratio

#endif  // SYMRATIO_ER_MODEL_HPP_
