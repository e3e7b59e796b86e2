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

#include "catch_amalgamated.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rsfa/matstar.hpp"

using namespace rsfa;

TEST_CASE("trivial languages give one state") {
  for (const Domain d : {fixtures::kTen, Domain::int32()}) {
    for (const auto& target : {fixtures::empty_language(d), fixtures::universal(d)}) {
      Teacher t(target);
      const auto r = learn_dsfa(t, interval_session_factory());
      CHECK(r.result.num_states() == 1);
      CHECK(r.result.is_deterministic());
      CHECK_FALSE(diff_witness(r.result, target).has_value());
    }
  }
}

TEST_CASE("learned DSFA is the minimal one") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto target = fixtures::random_small(seed, Domain::int32(), 6, 2);
    Teacher t(target);
    const auto r = learn_dsfa(t, interval_session_factory());
    CHECK(r.result.is_deterministic());
    CHECK_FALSE(diff_witness(r.result, target).has_value());
    CHECK(r.result.num_states() == minimal_dfa(target).num_states());
    CHECK(r.state_words.size() == r.result.num_states());
    CHECK(r.table_u >= r.result.num_states());
  }
}

TEST_CASE("enumeration sessions over a small domain") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto target = fixtures::random_small(seed, Domain{0, 5}, 4, 2);
    Teacher t(target);
    const auto r = learn_dsfa(t, enumeration_session_factory());
    CHECK_FALSE(diff_witness(r.result, target).has_value());
    CHECK(r.result.num_states() == minimal_dfa(target).num_states());
  }
}

TEST_CASE("second-to-last-high needs four states") {
  const auto target = fixtures::second_last_high_nfa();
  Teacher t(target);
  const auto r = learn_dsfa(t, interval_session_factory());
  CHECK(r.result.num_states() == 4);
}
