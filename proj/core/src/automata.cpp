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

#include "rsfa/automata.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <tuple>

#include "rsfa/error.hpp"

namespace rsfa {

std::vector<Minterm> minterms(std::span<const Predicate> preds, Domain domain) {
  std::vector<Char> points{domain.min};
  for (const auto& p : preds) {
    if (!(p.domain() == domain)) throw DomainError("predicate over a different domain");
    for (const auto& iv : p.intervals()) {
      points.push_back(iv.lo);
      if (iv.hi < domain.max) points.push_back(iv.hi + 1);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<std::size_t> cursor(preds.size(), 0);
  std::map<boost::dynamic_bitset<>, std::size_t> group_of;
  std::vector<boost::dynamic_bitset<>> signatures;
  std::vector<std::vector<Interval>> pieces;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Char lo = points[k];
    const Char hi = k + 1 < points.size() ? points[k + 1] - 1 : domain.max;
    boost::dynamic_bitset<> sig(preds.size());
    for (std::size_t i = 0; i < preds.size(); ++i) {
      const auto& ivs = preds[i].intervals();
      while (cursor[i] < ivs.size() && ivs[cursor[i]].hi < lo) ++cursor[i];
      if (cursor[i] < ivs.size() && ivs[cursor[i]].lo <= lo) sig.set(i);
    }
    auto [it, inserted] = group_of.try_emplace(sig, pieces.size());
    if (inserted) {
      signatures.push_back(sig);
      pieces.emplace_back();
    }
    pieces[it->second].push_back({lo, hi});
  }

  std::vector<Minterm> out;
  out.reserve(pieces.size());
  for (std::size_t g = 0; g < pieces.size(); ++g) {
    out.push_back({Predicate::normalize(pieces[g], domain), std::move(signatures[g])});
  }
  return out;
}

std::vector<Predicate> mintermize(std::span<const Predicate> preds, Domain domain) {
  std::vector<Predicate> blocks;
  for (auto& m : minterms(preds, domain)) blocks.push_back(std::move(m.block));
  return blocks;
}

Sfa determinize(const Sfa& m, std::size_t cap) {
  const Domain domain = m.domain();
  Sfa out(domain, 0);
  std::map<StateSet, State> ids;
  std::vector<StateSet> sets;

  auto intern = [&](const StateSet& s) -> State {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    if (sets.size() >= cap) {
      throw CapExceeded("determinization exceeded " + std::to_string(cap) + " states");
    }
    const State id = out.add_state();
    if (m.intersects_final(s)) out.set_final(id);
    ids.emplace(s, id);
    sets.push_back(s);
    return id;
  };

  out.set_initial(intern(m.initial()));
  std::vector<Predicate> preds;
  std::vector<State> targets;
  for (State i = 0; i < sets.size(); ++i) {
    const StateSet current = sets[i];
    preds.clear();
    targets.clear();
    for (auto q = current.find_first(); q != StateSet::npos; q = current.find_next(q)) {
      for (const auto& [to, p] : m.out_edges(q)) {
        preds.push_back(p);
        targets.push_back(to);
      }
    }
    for (const auto& mt : minterms(preds, domain)) {
      StateSet succ(m.num_states());
      for (auto j = mt.signature.find_first(); j != boost::dynamic_bitset<>::npos;
           j = mt.signature.find_next(j)) {
        succ.set(targets[j]);
      }
      out.add_to_edge(i, intern(succ), mt.block);
    }
  }
  return out;
}

namespace {

std::vector<State> reachable_in_bfs_order(const Sfa& dfa) {
  const State init = dfa.initial().find_first();
  std::vector<bool> seen(dfa.num_states(), false);
  std::vector<State> order{init};
  seen[init] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<std::pair<Char, State>> next;
    for (const auto& [to, p] : dfa.out_edges(order[i])) next.emplace_back(*p.witness(), to);
    std::sort(next.begin(), next.end());
    for (const auto& [c, to] : next) {
      if (!seen[to]) {
        seen[to] = true;
        order.push_back(to);
      }
    }
  }
  return order;
}

}  // namespace

Sfa minimize(const Sfa& dfa) {
  if (!dfa.is_deterministic()) {
    throw PreconditionError("minimize requires a deterministic complete automaton");
  }
  const Domain domain = dfa.domain();
  const std::vector<State> reach = reachable_in_bfs_order(dfa);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cls(dfa.num_states(), kNone);
  bool any_final = false, any_nonfinal = false;
  for (State q : reach) (dfa.is_final(q) ? any_final : any_nonfinal) = true;
  for (State q : reach) cls[q] = (any_final && any_nonfinal && dfa.is_final(q)) ? 1 : 0;
  std::size_t num_classes = (any_final && any_nonfinal) ? 2 : 1;

  using Signature = std::pair<std::size_t, std::vector<std::pair<std::size_t, Predicate>>>;
  for (;;) {
    std::map<Signature, std::size_t> ids;
    std::vector<std::size_t> next(dfa.num_states(), kNone);
    for (State q : reach) {
      std::map<std::size_t, Predicate> by_class;
      for (const auto& [to, p] : dfa.out_edges(q)) {
        auto [it, inserted] = by_class.try_emplace(cls[to], p);
        if (!inserted) it->second |= p;
      }
      Signature sig{cls[q], {by_class.begin(), by_class.end()}};
      next[q] = ids.try_emplace(std::move(sig), ids.size()).first->second;
    }
    const bool stable = ids.size() == num_classes;
    num_classes = ids.size();
    cls = std::move(next);
    if (stable) break;
  }

  // Quotient, then renumber classes in BFS order from the initial class.
  Sfa quotient(domain, num_classes);
  std::vector<bool> built(num_classes, false);
  for (State q : reach) {
    const std::size_t c = cls[q];
    if (built[c]) continue;
    built[c] = true;
    if (dfa.is_final(q)) quotient.set_final(c);
    for (const auto& [to, p] : dfa.out_edges(q)) quotient.add_to_edge(c, cls[to], p);
  }
  quotient.set_initial(cls[reach.front()]);

  const std::vector<State> order = reachable_in_bfs_order(quotient);
  std::vector<State> rename(num_classes);
  for (std::size_t i = 0; i < order.size(); ++i) rename[order[i]] = i;
  Sfa out(domain, num_classes);
  out.set_initial(0);
  for (State c = 0; c < num_classes; ++c) {
    if (quotient.is_final(c)) out.set_final(rename[c]);
    for (const auto& [to, p] : quotient.out_edges(c)) out.set_edge(rename[c], rename[to], p);
  }
  return out;
}

Sfa minimal_dfa(const Sfa& m, std::size_t cap) { return minimize(determinize(m, cap)); }

std::optional<Word> diff_witness_dfa(const Sfa& a, const Sfa& b) {
  if (!(a.domain() == b.domain())) throw DomainError("automata over different domains");
  if (!a.is_deterministic() || !b.is_deterministic()) {
    throw PreconditionError("diff_witness_dfa requires deterministic complete automata");
  }
  struct Node {
    State p, q;
    std::size_t parent;
    Char c;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<Node> nodes{{a.initial().find_first(), b.initial().find_first(), kRoot, 0}};
  std::map<std::pair<State, State>, std::size_t> seen{{{nodes[0].p, nodes[0].q}, 0}};
  std::vector<std::tuple<Char, State, State>> next;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node cur = nodes[i];
    if (a.is_final(cur.p) != b.is_final(cur.q)) {
      Word w;
      for (std::size_t k = i; nodes[k].parent != kRoot; k = nodes[k].parent) w.push_back(nodes[k].c);
      std::reverse(w.begin(), w.end());
      return w;
    }
    next.clear();
    for (const auto& [pa, phi] : a.out_edges(cur.p)) {
      for (const auto& [qb, psi] : b.out_edges(cur.q)) {
        const Predicate both = phi & psi;
        if (!both.is_empty()) next.emplace_back(*both.witness(), pa, qb);
      }
    }
    std::sort(next.begin(), next.end());
    for (const auto& [c, pa, qb] : next) {
      if (seen.try_emplace({pa, qb}, nodes.size()).second) nodes.push_back({pa, qb, i, c});
    }
  }
  return std::nullopt;
}

std::optional<Word> diff_witness(const Sfa& a, const Sfa& b, std::size_t cap) {
  if (!(a.domain() == b.domain())) throw DomainError("automata over different domains");
  auto w = diff_witness_dfa(determinize(a, cap), determinize(b, cap));
  if (w && a.accepts(*w) == b.accepts(*w)) {
    throw Error("diff_witness produced a string both automata agree on");
  }
  return w;
}

std::vector<std::vector<bool>> state_inclusion(const Sfa& dfa) {
  if (!dfa.is_deterministic()) {
    throw PreconditionError("state_inclusion requires a deterministic complete automaton");
  }
  const std::size_t n = dfa.num_states();
  auto idx = [n](State p, State q) { return static_cast<std::uint32_t>(p * n + q); };

  // Reverse adjacency of the product automaton in CSR form.
  std::vector<std::uint32_t> from, to;
  for (State p = 0; p < n; ++p) {
    for (State q = 0; q < n; ++q) {
      for (const auto& [p2, phi] : dfa.out_edges(p)) {
        for (const auto& [q2, psi] : dfa.out_edges(q)) {
          if (!(phi & psi).is_empty()) {
            from.push_back(idx(p, q));
            to.push_back(idx(p2, q2));
          }
        }
      }
    }
  }
  std::vector<std::uint32_t> offset(n * n + 1, 0);
  for (auto t : to) ++offset[t + 1];
  for (std::size_t i = 0; i < n * n; ++i) offset[i + 1] += offset[i];
  std::vector<std::uint32_t> preds(from.size());
  {
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (std::size_t e = 0; e < from.size(); ++e) preds[fill[to[e]]++] = from[e];
  }

  std::vector<bool> bad(n * n, false);
  std::deque<std::uint32_t> work;
  for (State p = 0; p < n; ++p) {
    for (State q = 0; q < n; ++q) {
      if (dfa.is_final(p) && !dfa.is_final(q)) {
        bad[idx(p, q)] = true;
        work.push_back(idx(p, q));
      }
    }
  }
  while (!work.empty()) {
    const auto x = work.front();
    work.pop_front();
    for (auto e = offset[x]; e < offset[x + 1]; ++e) {
      if (!bad[preds[e]]) {
        bad[preds[e]] = true;
        work.push_back(preds[e]);
      }
    }
  }
  std::vector<std::vector<bool>> incl(n, std::vector<bool>(n));
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q) incl[p][q] = !bad[idx(p, q)];
  return incl;
}

Sfa with_initial(const Sfa& m, const StateSet& initial) {
  Sfa copy = m;
  copy.set_initial_set(initial);
  return copy;
}

}  // namespace rsfa
