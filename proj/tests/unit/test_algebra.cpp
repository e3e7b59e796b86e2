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

#include <random>
#include <vector>

#include "oracles.hpp"
#include "rsfa/algebra.hpp"
#include "rsfa/error.hpp"

using rsfa::Domain;
using rsfa::Interval;
using rsfa::Predicate;

namespace {

const Domain kTen{0, 9};

Predicate P(std::vector<Interval> ivs, Domain d = kTen) { return Predicate::normalize(ivs, d); }

// Random predicate over d from a random bitmask; built through unions of singletons.
Predicate from_mask(std::uint64_t m, Domain d) {
  std::vector<Interval> ivs;
  for (rsfa::Char c = d.min; c <= d.max; ++c)
    if (m >> (c - d.min) & 1) ivs.push_back({c, c});
  return Predicate::normalize(ivs, d);
}

bool normalized(const Predicate& p) {
  const auto& iv = p.intervals();
  for (std::size_t i = 0; i < iv.size(); ++i) {
    if (iv[i].lo > iv[i].hi) return false;
    if (iv[i].lo < p.domain().min || iv[i].hi > p.domain().max) return false;
    if (i > 0 && iv[i].lo <= iv[i - 1].hi + 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("normalize merges overlapping and touching intervals") {
  CHECK(P({{0, 3}, {2, 5}}).intervals() == std::vector<Interval>{{0, 5}});
  CHECK(P({}).is_empty());
  CHECK(P({{0, 2}, {3, 5}}).intervals() == std::vector<Interval>{{0, 5}});
  CHECK(P({{7, 9}, {0, 1}, {4, 4}}).to_string() == "[[0,1],[4,4],[7,9]]");
  CHECK(P({{0, 9}}).is_top());
}

TEST_CASE("normalize rejects bad input") {
  CHECK_THROWS_AS(P({{3, 2}}), rsfa::DomainError);
  CHECK_THROWS_AS(P({{0, 10}}), rsfa::DomainError);
  CHECK_THROWS_AS(P({{-1, 0}}), rsfa::DomainError);
  CHECK_THROWS_AS(Predicate::top(Domain{5, 4}), rsfa::DomainError);
}

TEST_CASE("normalize is idempotent") {
  std::mt19937_64 rng(7);
  const Domain d{0, 63};
  for (int i = 0; i < 500; ++i) {
    const auto p = from_mask(rng(), d);
    const auto again = Predicate::normalize(p.intervals(), d);
    CHECK(again == p);
    CHECK(normalized(p));
  }
}

TEST_CASE("combine examples") {
  const auto a = P({{0, 5}});
  CHECK(rsfa::combine(rsfa::BoolOp::Not, a) == P({{6, 9}}));
  const auto b = P({{3, 9}});
  CHECK(rsfa::combine(rsfa::BoolOp::And, a, &b) == P({{3, 5}}));
  const auto bot = Predicate::bottom(kTen);
  for (const auto& p : {a, b, P({{1, 1}, {8, 9}}), bot}) CHECK(rsfa::combine(rsfa::BoolOp::Or, bot, &p) == p);
  CHECK_THROWS_AS(rsfa::combine(rsfa::BoolOp::And, a), rsfa::PreconditionError);
  const auto other = Predicate::top(Domain{0, 10});
  CHECK_THROWS_AS(a & other, rsfa::DomainError);
}

TEST_CASE("witness is the smallest element") {
  CHECK_FALSE(Predicate::bottom(kTen).witness().has_value());
  CHECK(P({{6, 9}}).witness() == 6);
  CHECK(Predicate::top(Domain::int32()).witness() == INT32_MIN);
  CHECK(Domain::int32().min == -(std::int64_t{1} << 31));
  CHECK(Domain::int32().max == (std::int64_t{1} << 31) - 1);
}

TEST_CASE("membership") {
  CHECK(P({{6, 9}}).contains(7));
  CHECK_FALSE(Predicate::bottom(kTen).contains(0));
  CHECK_FALSE(P({{0, 2}, {8, 9}}).contains(5));
  CHECK_THROWS_AS(P({{6, 9}}).contains(10), rsfa::DomainError);
}

TEST_CASE("cardinality, borders and subset against bitmasks") {
  std::mt19937_64 rng(11);
  const Domain d{0, 63};
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t ma = rng() & rng(), mb = rng() | rng();
    const auto a = from_mask(ma, d), b = from_mask(mb, d);
    CHECK(a.cardinality() == static_cast<std::uint64_t>(std::popcount(ma)));
    // a ∈ S ⇔ a−1 ∉ S, with bit −1 taken as 0.
    const std::uint64_t borders = ma ^ (ma << 1);
    CHECK(a.border_count() == static_cast<std::size_t>(std::popcount(borders)));
    CHECK(a.is_subset_of(b) == ((ma & ~mb) == 0));
    CHECK((a - b) == from_mask(ma & ~mb, d));
    CHECK(((a < b) || (b < a) || a == b));
  }
}

TEST_CASE("saturating sizes on wide domains") {
  const Domain wide{-(std::int64_t{1} << 62), std::int64_t{1} << 62};
  CHECK(wide.size() == (std::uint64_t{1} << 63) + 1);
  CHECK(Domain::int32().size() == std::uint64_t{1} << 32);
  CHECK(Predicate::top(Domain::int32()).cardinality() == std::uint64_t{1} << 32);
}

TEST_CASE("IntervalAlgebra satisfies the algebra interface") {
  const rsfa::IntervalAlgebra alg(kTen);
  CHECK(alg.at_most(5) == P({{0, 5}}));
  CHECK(alg.negate(alg.at_most(5)) == P({{6, 9}}));
  CHECK(alg.is_empty(alg.conj(alg.at_most(3), alg.negate(alg.at_most(3)))));
  CHECK(alg.disj(alg.at_most(3), alg.negate(alg.at_most(3))) == alg.top());
  CHECK(alg.member(alg.top(), 9));
  CHECK(alg.witness(alg.bottom()) == std::nullopt);
  CHECK(alg.at_most(-1).is_empty());
  CHECK(alg.at_most(100).is_top());
}

TEST_CASE("Boolean laws hold on random predicates over [0,63]") {
  std::mt19937_64 rng(2024);
  const Domain d{0, 63};
  const std::uint64_t full = oracle::full_mask(d);
  for (int i = 0; i < 3000; ++i) {
    const auto a = from_mask(rng(), d), b = from_mask(rng() & rng(), d), c = from_mask(rng() | rng(), d);
    const auto ma = oracle::mask_of(a), mb = oracle::mask_of(b), mc = oracle::mask_of(c);
    CHECK(oracle::mask_of(a & b) == (ma & mb));
    CHECK(oracle::mask_of(a | b) == (ma | mb));
    CHECK(oracle::mask_of(~a) == (~ma & full));
    CHECK((~(a & b)) == (~a | ~b));
    CHECK((~(a | b)) == (~a & ~b));
    CHECK((~~a) == a);
    CHECK((a & (b | c)) == ((a & b) | (a & c)));
    CHECK((a | (b & c)) == ((a | b) & (a | c)));
    CHECK(normalized(a & b));
    CHECK(normalized(a | b));
    CHECK(normalized(~a));
    if (!a.is_empty()) {
      REQUIRE(a.witness());
      CHECK(a.contains(*a.witness()));
      CHECK(*a.witness() == std::countr_zero(ma));
    }
  }
}
