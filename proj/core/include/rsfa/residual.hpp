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
#include <vector>

#include "rsfa/automata.hpp"

namespace rsfa {

/// The residual languages of L(m), one per state of its minimal complete
/// DSFA (the ∅ residual included when reachable), their inclusion order and
/// which of them are prime.
struct ResidualProfile {
  /// Minimal complete DSFA; state 0 is initial and stands for L itself.
  Sfa dfa;
  /// inclusion[i][j] iff L_i ⊆ L_j.
  std::vector<std::vector<bool>> inclusion;
  /// prime[i] iff L_i differs from the union of residuals it strictly contains.
  std::vector<bool> prime;

  std::size_t size() const { return prime.size(); }
  std::size_t prime_count() const;
  std::vector<State> primes() const;
  bool strictly_included(State a, State b) const { return inclusion[a][b] && !inclusion[b][a]; }
};

ResidualProfile residual_profile(const Sfa& m, std::size_t cap = kDefaultDeterminizationCap);

/// Canonical residual SFA: one state per prime residual, initial states the
/// primes contained in L, final states the primes containing ε, and on each
/// pair (L1, L2) the union of the minimal-DSFA edges out of L1 whose target
/// residual contains L2.
Sfa canonical_rsfa(const ResidualProfile& profile);
Sfa canonical_rsfa(const Sfa& m, std::size_t cap = kDefaultDeterminizationCap);

/// For each state q of `hyp`, the residual index i with L_q = L_i, or
/// nullopt when some state's language is not a residual of the profile's
/// language.
std::optional<std::vector<State>> identify_states(const ResidualProfile& profile,
                                                  const Sfa& hyp);

struct TransitionBounds {
  /// {a | L_q' ⊆ a⁻¹L_q, no hypothesis state q'' with L_q' ⊊ L_q'' ⊆ a⁻¹L_q}
  Predicate simplified;
  /// {a | L_q' ⊆ a⁻¹L_q}
  Predicate saturated;
};

/// Range of predicates that may label (q, to) in `hyp` without changing its
/// language. `ident` comes from identify_states.
TransitionBounds transition_bounds(const ResidualProfile& profile, const std::vector<State>& ident,
                                   State q, State to);

/// Convenience form. Throws PreconditionError when the states of `hyp` are not
/// residuals of L(target).
TransitionBounds transition_bounds(const Sfa& target, const Sfa& hyp, State q, State to,
                                   std::size_t cap = kDefaultDeterminizationCap);

}  // namespace rsfa
