// Copyright 2026 The rsfa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsfa/residual.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "rsfa/error.hpp"

namespace rsfa {

std::size_t ResidualProfile::prime_count() const {
  std::size_t n = 0;
  for (bool p : prime) n += p;
  return n;
}

std::vector<State> ResidualProfile::primes() const {
  std::vector<State> out;
  for (State i = 0; i < prime.size(); ++i)
    if (prime[i]) out.push_back(i);
  return out;
}

namespace {

// next[q][b]: successor of q on any character of the b-th minterm of all
// edge predicates.
std::vector<std::vector<State>> block_successors(const Sfa& dfa) {
  std::vector<Predicate> preds;
  for (State q = 0; q < dfa.num_states(); ++q)
    for (const auto& [to, phi] : dfa.out_edges(q)) preds.push_back(phi);
  std::vector<Char> reps;
  for (const auto& block : mintermize(preds, dfa.domain())) reps.push_back(*block.witness());
  std::vector<std::vector<State>> next(dfa.num_states());
  for (State q = 0; q < dfa.num_states(); ++q)
    for (Char c : reps) next[q].push_back(dfa.successor(q, c));
  return next;
}

// L_r ⊆ ⋃_{s ∈ below} L_s on a minimal complete DSFA. Searches pairs (x, S)
// keeping only the ⊆-maximal members of S and pruning once L_x ⊆ L_s for
// some s ∈ S.
bool covered_by_union(const Sfa& dfa, const std::vector<std::vector<State>>& next,
                      const std::vector<std::vector<bool>>& inc, State r, std::vector<State> below,
                      std::size_t limit) {
  auto maximal = [&](std::vector<State> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<State> out;
    for (State a : s) {
      bool dominated = false;
      for (State b : s) {
        if (a != b && inc[a][b]) {
          dominated = true;
          break;
        }
      }
      if (!dominated) out.push_back(a);
    }
    return out;
  };
  auto pruned = [&](State x, const std::vector<State>& s) {
    for (State t : s)
      if (inc[x][t]) return true;
    return false;
  };

  using Node = std::pair<State, std::vector<State>>;
  std::set<Node> seen;
  std::deque<Node> work;
  Node start{r, maximal(std::move(below))};
  if (pruned(start.first, start.second)) return true;
  seen.insert(start);
  work.push_back(std::move(start));
  while (!work.empty()) {
    const auto [x, s] = std::move(work.front());
    work.pop_front();
    // Not pruned, so some member of L_x is outside every L_t; ε is checked here.
    if (dfa.is_final(x)) {
      bool any = false;
      for (State t : s) any = any || dfa.is_final(t);
      if (!any) return false;
    }
    for (std::size_t b = 0; b < next[x].size(); ++b) {
      const State x2 = next[x][b];
      std::vector<State> s2;
      s2.reserve(s.size());
      for (State t : s) s2.push_back(next[t][b]);
      s2 = maximal(std::move(s2));
      if (pruned(x2, s2)) continue;
      Node next{x2, std::move(s2)};
      if (seen.insert(next).second) {
        if (seen.size() > limit) throw CapExceeded("prime analysis exceeded its search limit");
        work.push_back(std::move(next));
      }
    }
  }
  return true;
}

}  // namespace

ResidualProfile residual_profile(const Sfa& m, std::size_t cap) {
  ResidualProfile prof;
  prof.dfa = minimal_dfa(m, cap);
  prof.inclusion = state_inclusion(prof.dfa);
  const std::size_t n = prof.dfa.num_states();
  prof.prime.assign(n, false);
  const auto next = block_successors(prof.dfa);
  for (State r = 0; r < n; ++r) {
    std::vector<State> below;
    for (State s = 0; s < n; ++s) {
      if (s != r && prof.inclusion[s][r]) below.push_back(s);
    }
    // The union of strict subsets is always ⊆ L_r; r is prime iff it is strictly smaller.
    prof.prime[r] = !covered_by_union(prof.dfa, next, prof.inclusion, r, std::move(below), cap * 64);
  }
  return prof;
}

Sfa canonical_rsfa(const ResidualProfile& profile) {
  const auto primes = profile.primes();
  const auto& dfa = profile.dfa;
  Sfa out(dfa.domain(), primes.size());
  for (std::size_t k = 0; k < primes.size(); ++k) {
    if (profile.inclusion[primes[k]][0]) out.set_initial(k);
    if (dfa.is_final(primes[k])) out.set_final(k);
    for (const auto& [t, phi] : dfa.out_edges(primes[k])) {
      for (std::size_t k2 = 0; k2 < primes.size(); ++k2) {
        if (profile.inclusion[primes[k2]][t]) out.add_to_edge(k, k2, phi);
      }
    }
  }
  return out;
}

Sfa canonical_rsfa(const Sfa& m, std::size_t cap) { return canonical_rsfa(residual_profile(m, cap)); }

std::optional<std::vector<State>> identify_states(const ResidualProfile& profile,
                                                  const Sfa& hyp) {
  if (!(hyp.domain() == profile.dfa.domain())) throw DomainError("automata over different domains");
  // minimize() numbers states canonically, so equal languages give equal automata.
  std::vector<Sfa> residual_dfas;
  for (State r = 0; r < profile.size(); ++r) {
    residual_dfas.push_back(minimize(with_initial(profile.dfa, profile.dfa.singleton(r))));
  }
  std::vector<State> ident;
  for (State q = 0; q < hyp.num_states(); ++q) {
    const Sfa lang = minimal_dfa(with_initial(hyp, hyp.singleton(q)));
    std::optional<State> match;
    for (State r = 0; r < residual_dfas.size() && !match; ++r) {
      if (residual_dfas[r] == lang) match = r;
    }
    if (!match) return std::nullopt;
    ident.push_back(*match);
  }
  return ident;
}

TransitionBounds transition_bounds(const ResidualProfile& profile, const std::vector<State>& ident,
                                   State q, State to) {
  if (q >= ident.size() || to >= ident.size()) throw PreconditionError("unknown state");
  const State r = ident[q];
  const State r2 = ident[to];
  const Domain domain = profile.dfa.domain();
  TransitionBounds b{Predicate::bottom(domain), Predicate::bottom(domain)};
  for (const auto& [t, phi] : profile.dfa.out_edges(r)) {
    if (!profile.inclusion[r2][t]) continue;
    b.saturated |= phi;
    bool dominated = false;
    for (State other : ident) {
      if (profile.strictly_included(r2, other) && profile.inclusion[other][t]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) b.simplified |= phi;
  }
  return b;
}

TransitionBounds transition_bounds(const Sfa& target, const Sfa& hyp, State q, State to,
                                   std::size_t cap) {
  const auto profile = residual_profile(target, cap);
  const auto ident = identify_states(profile, hyp);
  if (!ident) throw PreconditionError("hypothesis states are not residuals of the target");
  return transition_bounds(profile, *ident, q, to);
}

}  // namespace rsfa
