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

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rsfa/error.hpp"
#include "rsfa/table.hpp"
#include "rsfa/teacher.hpp"

using namespace rsfa;

namespace {

class CountingOracle final : public MembershipOracle {
 public:
  explicit CountingOracle(const Sfa& m) : m_(m) {}
  bool mq(const Word& w) override {
    ++calls;
    return oracle::accepts(m_, w);
  }
  std::size_t calls = 0;

 private:
  const Sfa& m_;
};

Row bits(const std::string& s) {
  Row r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = s[i] == '1';
  return r;
}

std::vector<Row> brute_primes(const std::vector<Row>& rows) {
  std::vector<Row> distinct;
  for (const auto& r : rows)
    if (std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(r);
  std::vector<Row> out;
  const std::size_t k = distinct.size();
  for (const auto& r : distinct) {
    // r is composite iff some subset of strictly smaller rows unions to r.
    bool composite = r.none();
    for (std::uint32_t mask = 1; mask < (1u << k) && !composite; ++mask) {
      Row u(r.size());
      bool ok = true;
      for (std::size_t i = 0; i < k; ++i) {
        if (!(mask >> i & 1)) continue;
        if (!distinct[i].is_proper_subset_of(r)) {
          ok = false;
          break;
        }
        u |= distinct[i];
      }
      if (ok && u == r) composite = true;
    }
    if (!composite) out.push_back(r);
  }
  return out;
}

Word random_word(std::mt19937_64& rng, Char lo, Char hi, std::size_t max_len) {
  Word w(rng() % (max_len + 1));
  for (auto& c : w) c = lo + static_cast<Char>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  return w;
}

}  // namespace

TEST_CASE("initial table") {
  const auto all = fixtures::universal(fixtures::kTen);
  CountingOracle o(all);
  ObservationTable t(o);
  CHECK(t.prefixes() == std::vector<Word>{Word{}});
  CHECK(t.suffixes() == std::vector<Word>{Word{}});
  CHECK(t.row(Word{}).test(0));
  CHECK(o.calls == 1);
  CHECK(t.measure(MeasureMode::Light, fixtures::kTen).l_U == 1);

  const auto rfa = fixtures::last_high_rfa();
  CountingOracle o2(rfa);
  ObservationTable t2(o2);
  CHECK(t2.row(Word{}).none());
  CHECK(t2.prime_rows().empty());
}

TEST_CASE("extensions query exactly the new cells") {
  const auto m = fixtures::second_last_high_nfa();
  CountingOracle o(m);
  ObservationTable t(o);
  CHECK(t.add_prefix(Word{7}));
  CHECK(o.calls == 2);
  CHECK(t.add_suffix(Word{1}));
  CHECK(o.calls == 4);  // |U| new cells
  CHECK(t.add_suffix(Word{1, 1}));
  CHECK(o.calls == 6);
  CHECK(t.add_prefix(Word{7, 3}));
  CHECK(o.calls == 9);  // |V| new cells
  CHECK(t.cells_filled() == 9);

  const auto before = t.version();
  CHECK_FALSE(t.add_suffix(Word{}));
  CHECK_FALSE(t.add_prefix(Word{7}));
  CHECK(t.version() == before);
  CHECK(o.calls == 9);
  CHECK_THROWS_AS(t.add_prefix(Word{1, 2}), PreconditionError);
  CHECK_THROWS_AS(t.row(Word{9}), PreconditionError);
}

TEST_CASE("rows equal target membership and equal residuals give equal rows") {
  const auto m = fixtures::second_last_high_nfa();
  CountingOracle o(m);
  ObservationTable t(o);
  for (const auto& v : {Word{0}, Word{9}, Word{6, 6}}) t.add_suffix(v);
  for (const auto& u : {Word{0}, Word{1}, Word{6}, Word{9}, Word{6, 0}, Word{6, 9}}) t.add_prefix(u);
  for (std::size_t i = 0; i < t.prefixes().size(); ++i)
    for (std::size_t j = 0; j < t.suffixes().size(); ++j)
      CHECK(t.row(i).test(j) == oracle::accepts(m, concat(t.prefixes()[i], t.suffixes()[j])));
  CHECK(t.row(Word{0}) == t.row(Word{1}));
  CHECK(t.row(Word{6}) == t.row(Word{9}));
}

TEST_CASE("prime rows") {
  const std::vector<Row> rows{bits("1100"), bits("1010"), bits("1110")};
  CHECK(prime_rows_of(rows) == std::vector<Row>{bits("1100"), bits("1010")});
  const std::vector<Row> zero{bits("0000"), bits("0100")};
  CHECK(prime_rows_of(zero) == std::vector<Row>{bits("0100")});
  const std::vector<Row> dup{bits("01"), bits("01"), bits("11")};
  CHECK(prime_rows_of(dup) == std::vector<Row>{bits("01"), bits("11")});

  std::mt19937_64 rng(3);
  for (int round = 0; round < 500; ++round) {
    const std::size_t width = 2 + rng() % 6, k = 1 + rng() % 12;
    std::vector<Row> rs;
    for (std::size_t i = 0; i < k; ++i) {
      Row r(width);
      for (std::size_t j = 0; j < width; ++j) r[j] = rng() % 3 == 0;
      rs.push_back(r);
    }
    CHECK(prime_rows_of(rs) == brute_primes(rs));
  }
}

TEST_CASE("is_new_prime") {
  const auto m = fixtures::second_last_high_nfa();
  CountingOracle o(m);
  ObservationTable t(o);
  t.add_suffix(Word{0});
  t.add_suffix(Word{0, 0});
  t.add_prefix(Word{7});
  t.add_prefix(Word{7, 7});
  for (const auto& r : t.prime_rows()) CHECK_FALSE(t.is_new_prime(r));
  // Rows here: ε → 000, 7 → 010, 77 → 111 (over V = ε, 0, 00). 
  CHECK(t.row(Word{7}) == bits("010"));
  CHECK(t.is_new_prime(bits("001")));
  CHECK_FALSE(t.is_new_prime(bits("000")));

  std::mt19937_64 rng(17);
  for (int round = 0; round < 300; ++round) {
    const auto target = fixtures::random_small(static_cast<std::uint64_t>(round), Domain{0, 3}, 3, 2);
    CountingOracle o2(target);
    ObservationTable t2(o2);
    for (int i = 0; i < 4; ++i) t2.add_suffix(random_word(rng, 0, 3, 3));
    for (int i = 0; i < 6; ++i) {
      const auto& us = t2.prefixes();
      const Word u = concat(us[rng() % us.size()], Word{static_cast<Char>(rng() % 4)});
      t2.add_prefix(u);
    }
    Row temp(t2.suffixes().size());
    for (std::size_t j = 0; j < temp.size(); ++j) temp[j] = rng() % 2;
    std::vector<Row> rows;
    for (std::size_t i = 0; i < t2.prefixes().size(); ++i) rows.push_back(t2.row(i));
    const auto before = brute_primes(rows);
    rows.push_back(temp);
    const auto after = brute_primes(rows);
    const bool expect = std::find(after.begin(), after.end(), temp) != after.end() &&
                        std::find(before.begin(), before.end(), temp) == before.end();
    CHECK(t2.is_new_prime(temp) == expect);
  }
}

TEST_CASE("invariants survive random extensions") {
  std::mt19937_64 rng(23);
  const auto target = fixtures::random_small(4, Domain{0, 3}, 4, 2);
  CountingOracle o(target);
  ObservationTable t(o);
  for (int step = 0; step < 1000; ++step) {
    if (rng() % 2) {
      const auto& us = t.prefixes();
      t.add_prefix(concat(us[rng() % us.size()], Word{static_cast<Char>(rng() % 4)}));
    } else {
      t.add_suffix(random_word(rng, 0, 3, 4));
    }
  }
  std::set<Word> us(t.prefixes().begin(), t.prefixes().end());
  CHECK(us.size() == t.prefixes().size());
  for (const auto& u : t.prefixes())
    if (!u.empty()) CHECK(us.contains(prefix(u, u.size() - 1)));
  CHECK(t.cells_filled() == t.prefixes().size() * t.suffixes().size());
  CHECK(o.calls == t.cells_filled());
  for (std::size_t i = 0; i < t.prefixes().size(); ++i) {
    REQUIRE(t.row(i).size() == t.suffixes().size());
    for (std::size_t j = 0; j < t.suffixes().size(); ++j)
      CHECK(t.row(i).test(j) == oracle::accepts(target, concat(t.prefixes()[i], t.suffixes()[j])));
  }
}

TEST_CASE("measure tuple against brute-force enumeration") {
  const Domain d{0, 3};
  std::mt19937_64 rng(29);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto target = fixtures::random_small(seed, d, 3, 2);
    CountingOracle o(target);
    SfaOracle side(target);
    ObservationTable t(o);
    for (int i = 0; i < 3; ++i) t.add_suffix(random_word(rng, 0, 3, 2));
    for (int i = 0; i < 4; ++i) {
      const auto& us = t.prefixes();
      t.add_prefix(concat(us[rng() % us.size()], Word{static_cast<Char>(rng() % 4)}));
    }
    const auto calls = o.calls;
    const auto m = t.measure(MeasureMode::Full, d, &side);
    CHECK(o.calls == calls);

    std::set<std::vector<bool>> urows, r;
    std::vector<Row> rowlist;
    for (std::size_t i = 0; i < t.prefixes().size(); ++i) rowlist.push_back(t.row(i));
    for (const auto& u : t.prefixes()) {
      std::vector<Word> mids{u};
      for (Char a = 0; a < 4; ++a) mids.push_back(concat(u, Word{a}));
      for (std::size_t k = 0; k < mids.size(); ++k) {
        std::vector<bool> row;
        for (const auto& v : t.suffixes()) row.push_back(oracle::accepts(target, concat(mids[k], v)));
        if (k == 0) urows.insert(row);
        r.insert(row);
      }
    }
    std::size_t strict = 0;
    for (const auto& x : r)
      for (const auto& y : r)
        if (x != y && oracle::subset(x, y)) ++strict;
    CHECK(m.l_U == urows.size());
    CHECK(m.p == brute_primes(rowlist).size());
    CHECK(m.p <= m.l_U);
    REQUIRE(m.l);
    CHECK(*m.l == r.size());
    CHECK(*m.i == strict);
  }
  const auto target = fixtures::universal(Domain::int32());
  CountingOracle o(target);
  ObservationTable t(o);
  SfaOracle side(target);
  CHECK_THROWS_AS(t.measure(MeasureMode::Full, Domain::int32(), &side), PreconditionError);
  CHECK_THROWS_AS(t.measure(MeasureMode::Full, d), PreconditionError);
}

TEST_CASE("TSV dump") {
  const auto m = fixtures::second_last_high_nfa();
  CountingOracle o(m);
  ObservationTable t(o);
  t.add_suffix(Word{0});
  t.add_prefix(Word{7});
  CHECK(t.dump_tsv() == "U\t[]\t[0]\n[]\t-\t-\n[7]\t-\t+\n");
}
