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
#include "rsfa/teacher.hpp"

using namespace rsfa;

TEST_CASE("membership agrees with direct simulation") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto target = fixtures::random_small(seed, Domain{0, 3}, 4, 2);
    Teacher t(target);
    for (const auto& w : oracle::words_upto(oracle::all_chars(Domain{0, 3}), 4))
      CHECK(t.mq(w) == oracle::accepts(target, w));
  }
}

TEST_CASE("mq of the empty word is initial-final overlap") {
  Sfa m(fixtures::kTen, 2);
  m.set_initial(0);
  m.set_final(1);
  CHECK_FALSE(Teacher(m).mq(Word{}));
  m.set_initial(1);
  CHECK(Teacher(m).mq(Word{}));
}

TEST_CASE("query counters") {
  Teacher t(fixtures::last_high_dsfa());
  CHECK(t.stats().eqs == 0);
  CHECK(t.stats().mqs_raw == 0);
  CHECK(t.stats().mqs_distinct == 0);
  t.mq(Word{1});
  t.mq(Word{1});
  t.mq(Word{7});
  CHECK(t.stats().mqs_raw == 3);
  CHECK(t.stats().mqs_distinct == 2);
  t.eq(fixtures::last_high_rfa());
  t.eq(fixtures::universal(fixtures::kTen));
  CHECK(t.stats().eqs == 2);
  CHECK(t.stats().counterexample_lengths == std::vector<std::size_t>{0});
  CHECK(t.stats().max_counterexample_length() == 0);
}

TEST_CASE("equivalence returns a shortest counterexample") {
  const auto target = fixtures::second_last_high_nfa();
  Teacher t(target);
  CHECK_FALSE(t.eq(target).has_value());
  const auto ce = t.eq(fixtures::empty_language(fixtures::kTen));
  REQUIRE(ce);
  CHECK(ce->size() == 2);
  CHECK(oracle::accepts(target, *ce));

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Domain d{0, 3};
    const auto a = fixtures::random_small(seed, d, 3, 2);
    const auto b = fixtures::random_small(seed + 100, d, 3, 2);
    Teacher ta(a);
    const auto got = ta.eq(b);
    const auto brute = oracle::shortest_difference(a, b, oracle::all_chars(d), 6);
    if (!brute) {
      CHECK((!got || got->size() > 6));
    } else {
      REQUIRE(got);
      CHECK(got->size() == brute->size());
      CHECK(oracle::accepts(a, *got) != oracle::accepts(b, *got));
    }
  }
}

TEST_CASE("target is determinized once") {
  const auto target = fixtures::second_last_high_nfa();
  Teacher t(target);
  CHECK(t.target_dfa().is_deterministic());
  CHECK_FALSE(diff_witness(t.target_dfa(), target).has_value());
}

TEST_CASE("event log records queries") {
  Teacher t(fixtures::last_high_dsfa());
  EventLog log;
  t.set_event_log(&log);
  t.mq(Word{7});
  t.eq(fixtures::last_high_dsfa());
  CHECK(log.count("MQ") == 1);
  CHECK(log.count("EQ") == 1);
}
