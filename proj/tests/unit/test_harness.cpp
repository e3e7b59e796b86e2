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

#include <sstream>

#include "rsfa/error.hpp"
#include "rsfa/harness.hpp"

using namespace rsfa;

namespace {

BenchConfig small_config() {
  BenchConfig c;
  c.trials = 3;
  c.params.n_q = 4;
  c.params.seed = 5;
  c.record_time = false;
  return c;
}

}  // namespace

TEST_CASE("learner names") {
  CHECK(parse_learner("rsfa") == LearnerKind::Rsfa);
  CHECK(parse_learner("matstar") == LearnerKind::MatStar);
  CHECK(learner_name(LearnerKind::MatStar) == "matstar");
  CHECK_THROWS_AS(parse_learner("lstar"), ParseError);
  CHECK(parse_learners("matstar,rsfa") == std::vector{LearnerKind::MatStar, LearnerKind::Rsfa});
  CHECK(parse_count_mode("raw") == CountMode::Raw);
  CHECK_THROWS_AS(parse_count_mode("both"), ParseError);
}

TEST_CASE("one trial gives a row per learner") {
  auto c = small_config();
  c.trials = 1;
  const auto rows = run_bench(c);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].learner == LearnerKind::Rsfa);
  CHECK(rows[1].learner == LearnerKind::MatStar);
  CHECK(rows[0].seed == derive_seed(5, 0));
  CHECK(rows[0].residual_count == rows[1].residual_count);
  CHECK(rows[0].final_states == rows[0].prime_residual_count);
  CHECK(rows[1].final_states == rows[1].residual_count);
}

TEST_CASE("bench output is reproducible across job counts") {
  auto c = small_config();
  std::ostringstream a, b;
  write_csv(a, run_bench(c));
  c.jobs = 3;
  write_csv(b, run_bench(c));
  CHECK(a.str() == b.str());
}

TEST_CASE("csv round trip") {
  const auto rows = run_bench(small_config());
  std::ostringstream os;
  write_csv(os, rows);
  std::istringstream is(os.str());
  const auto back = read_csv(is);
  std::ostringstream again;
  write_csv(again, back);
  CHECK(again.str() == os.str());
  CHECK(os.str().rfind(csv_header(), 0) == 0);
}

TEST_CASE("malformed csv is rejected") {
  std::istringstream no_header("1,2,3\n");
  CHECK_THROWS_AS(read_csv(no_header), ParseError);
  std::istringstream short_row(csv_header() + "\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(short_row), ParseError);
  std::istringstream bad_num(csv_header() + "\n1,x,4,3,rsfa,1,1,1,3,2,2,0.000,0\n");
  CHECK_THROWS_AS(read_csv(bad_num), ParseError);
}

TEST_CASE("skipped targets") {
  GenParams p;
  p.n_q = 8;
  p.seed = 1;
  const auto target = random_sfa(p);
  const auto info = analyze_target(target, 1);
  CHECK(info.skipped);
  const auto r = run_trial(target, info, LearnerKind::Rsfa, 0, 1, {}, false);
  CHECK(r.skipped);
  CHECK(r.eqs == 0);
  CHECK(summarize({r}, CountMode::Distinct).empty());
}

TEST_CASE("mean and confidence interval") {
  const auto one = mean_ci({4.0});
  CHECK(one.mean == 4.0);
  CHECK_FALSE(one.half_width.has_value());
  const auto ten = mean_ci({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(ten.mean == Catch::Approx(5.5));
  REQUIRE(ten.half_width);
  CHECK(*ten.half_width == Catch::Approx(1.8765571312024227));
}

TEST_CASE("summary groups by residual count and learner") {
  const std::vector<double> eqs{3, 3, 4, 4, 5, 9, 9, 10, 12, 20};
  std::vector<TrialRecord> rows;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    TrialRecord r;
    r.trial = i;
    r.residual_count = 6;
    r.learner = LearnerKind::MatStar;
    r.eqs = static_cast<std::uint64_t>(eqs[i]);
    r.mqs_raw = 100;
    r.mqs_distinct = 10;
    rows.push_back(r);
  }
  TrialRecord lone;
  lone.residual_count = 2;
  lone.learner = LearnerKind::Rsfa;
  rows.push_back(lone);
  lone.learner = LearnerKind::MatStar;
  rows.push_back(lone);

  const auto s = summarize(rows, CountMode::Distinct);
  REQUIRE(s.size() == 3);
  CHECK(s[0].residual_count == 2);
  CHECK(s[0].learner == LearnerKind::Rsfa);
  CHECK(s[1].learner == LearnerKind::MatStar);
  CHECK_FALSE(s[0].eqs.half_width.has_value());
  CHECK(s[2].residual_count == 6);
  CHECK(s[2].samples == 10);
  CHECK(s[2].eqs.mean == Catch::Approx(7.9));
  CHECK(*s[2].eqs.half_width == Catch::Approx(3.3114398345399207));
  CHECK(s[2].mqs.mean == 10.0);
  CHECK(summarize(rows, CountMode::Raw)[2].mqs.mean == 100.0);

  std::ostringstream os;
  write_summary_csv(os, s);
  CHECK(os.str().rfind("residual_count,learner,samples,eq_mean,eq_ci95", 0) == 0);
}
