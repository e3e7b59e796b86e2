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

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rsfa/algebra.hpp"
#include "rsfa/word.hpp"

namespace rsfa {

using State = std::size_t;
using StateSet = boost::dynamic_bitset<>;

/// Symbolic finite automaton over an interval algebra. Each ordered pair of
/// states carries at most one predicate; pairs without an entry carry ⊥.
class Sfa {
 public:
  Sfa() : Sfa(Domain{}, 0) {}
  Sfa(Domain domain, std::size_t num_states);

  const Domain& domain() const { return domain_; }
  std::size_t num_states() const { return out_.size(); }
  State add_state();

  void set_initial(State q, bool value = true);
  void set_final(State q, bool value = true);
  bool is_initial(State q) const { return initial_.test(check(q)); }
  bool is_final(State q) const { return final_.test(check(q)); }
  const StateSet& initial() const { return initial_; }
  const StateSet& final_states() const { return final_; }
  void set_initial_set(const StateSet& s);

  /// Replaces the predicate on (from, to). A ⊥ predicate removes the edge.
  void set_edge(State from, State to, const Predicate& p);
  /// Unions `p` into the predicate on (from, to).
  void add_to_edge(State from, State to, const Predicate& p);
  /// Predicate on (from, to); ⊥ when absent.
  Predicate edge(State from, State to) const;
  const std::map<State, Predicate>& out_edges(State from) const { return out_[check(from)]; }
  std::size_t num_edges() const;

  StateSet empty_set() const { return StateSet(num_states()); }
  StateSet singleton(State q) const;

  /// ⋃_{q ∈ qs} δ(q, a). Throws DomainError for `a` outside the domain.
  StateSet step(const StateSet& qs, Char a) const;
  StateSet run(const StateSet& qs, std::span<const Char> w) const;
  bool accepts(std::span<const Char> w) const;
  bool accepts_from(State q, std::span<const Char> w) const;
  bool intersects_final(const StateSet& qs) const { return qs.intersects(final_); }

  /// One initial state and, for every state, pairwise disjoint outgoing
  /// predicates that jointly cover the domain.
  bool is_deterministic() const;
  /// The unique successor of `q` on `a` in a deterministic automaton.
  State successor(State q, Char a) const;

  friend bool operator==(const Sfa&, const Sfa&) = default;

 private:
  State check(State q) const;
  void step_into(const StateSet& qs, Char a, StateSet& next) const;

  Domain domain_;
  StateSet initial_;
  StateSet final_;
  std::vector<std::map<State, Predicate>> out_;
};

}  // namespace rsfa
