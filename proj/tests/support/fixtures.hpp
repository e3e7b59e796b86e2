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

#include "rsfa/gen.hpp"
#include "rsfa/sfa.hpp"

namespace fixtures {

using rsfa::Domain;
using rsfa::Predicate;
using rsfa::Sfa;

inline const Domain kTen{0, 9};

// Σ*·[6,9] over [0,9] as a complete DSFA: q0 --¬(X≤5)--> q1.
inline Sfa last_high_dsfa() {
  Sfa m(kTen, 2);
  m.set_initial(0);
  m.set_final(1);
  for (rsfa::State q : {0u, 1u}) {
    m.set_edge(q, 0, Predicate::range(kTen, 0, 5));
    m.set_edge(q, 1, Predicate::range(kTen, 6, 9));
  }
  return m;
}

// The same language with a nondeterministic guess of the last character.
inline Sfa last_high_rfa() {
  Sfa m(kTen, 2);
  m.set_initial(0);
  m.set_final(1);
  m.set_edge(0, 0, Predicate::top(kTen));
  m.set_edge(0, 1, Predicate::range(kTen, 6, 9));
  return m;
}

// Σ*·[6,9]·Σ over [0,9]: four residuals, three of them prime.
inline Sfa second_last_high_nfa() {
  Sfa m(kTen, 3);
  m.set_initial(0);
  m.set_final(2);
  m.set_edge(0, 0, Predicate::top(kTen));
  m.set_edge(0, 1, Predicate::range(kTen, 6, 9));
  m.set_edge(1, 2, Predicate::top(kTen));
  return m;
}

inline Sfa universal(Domain d) {
  Sfa m(d, 1);
  m.set_initial(0);
  m.set_final(0);
  m.set_edge(0, 0, Predicate::top(d));
  return m;
}

inline Sfa empty_language(Domain d) {
  Sfa m(d, 1);
  m.set_initial(0);
  return m;
}

inline Sfa random_small(std::uint64_t seed, Domain d, std::size_t states = 3, std::size_t draws = 2) {
  rsfa::GenParams p;
  p.n_q = states;
  p.n_delta = draws;
  p.domain = d;
  p.seed = seed;
  return rsfa::random_sfa(p);
}

}  // namespace fixtures
