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
#include <optional>
#include <span>
#include <vector>

#include "rsfa/sfa.hpp"

namespace rsfa {

inline constexpr std::size_t kDefaultDeterminizationCap = 4096;

/// A block of a minterm partition and the set of input predicates that
/// contain it (bit i set iff block ⊆ preds[i]).
struct Minterm {
  Predicate block;
  boost::dynamic_bitset<> signature;
};

/// Coarsest partition of the domain on which every predicate is constant.
/// Blocks are nonempty, pairwise disjoint, cover the domain and are ordered by
/// their smallest element.
std::vector<Minterm> minterms(std::span<const Predicate> preds, Domain domain);
std::vector<Predicate> mintermize(std::span<const Predicate> preds, Domain domain);

/// Subset construction. The result is deterministic, complete and contains
/// only reachable subsets; the empty subset becomes an explicit dead state.
/// Throws CapExceeded beyond `cap` subset-states.
Sfa determinize(const Sfa& m, std::size_t cap = kDefaultDeterminizationCap);

/// Moore-style partition refinement on a deterministic complete automaton.
/// States are numbered in breadth-first order from the initial state,
/// following edges by their smallest character, so equal languages give
/// structurally equal results. Throws PreconditionError on other input.
Sfa minimize(const Sfa& dfa);

/// minimize(determinize(m, cap))
Sfa minimal_dfa(const Sfa& m, std::size_t cap = kDefaultDeterminizationCap);

/// Shortest string in the symmetric difference of two deterministic complete
/// automata, or nullopt when they accept the same language.
std::optional<Word> diff_witness_dfa(const Sfa& a, const Sfa& b);

/// Shortest string in L(a) △ L(b), or nullopt when the languages coincide.
/// The witness is re-checked against both automata before it is returned.
std::optional<Word> diff_witness(const Sfa& a, const Sfa& b,
                                 std::size_t cap = kDefaultDeterminizationCap);

/// Residual inclusion on a deterministic complete automaton:
/// result[p][q] iff L_p ⊆ L_q. Computed as emptiness of every product state
/// (p, q) against final × non-final, propagated backwards.
std::vector<std::vector<bool>> state_inclusion(const Sfa& dfa);

/// Copy of `m` whose initial states are exactly `initial`.
Sfa with_initial(const Sfa& m, const StateSet& initial);

}  // namespace rsfa
