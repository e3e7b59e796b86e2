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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsfa/gen.hpp"
#include "rsfa/learner.hpp"

namespace rsfa {

enum class LearnerKind { Rsfa, MatStar };
enum class CountMode { Distinct, Raw };

std::string_view learner_name(LearnerKind k);
/// "rsfa" or "matstar"; throws ParseError otherwise.
LearnerKind parse_learner(std::string_view name);
/// Comma-separated learner list.
std::vector<LearnerKind> parse_learners(std::string_view list);
CountMode parse_count_mode(std::string_view name);

/// Runs the chosen learner with interval sessions.
RunOutcome run_learner(Teacher& teacher, LearnerKind kind, const LearnerOptions& options = {});

/// One benchmark row. CSV column order follows the field order.
struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  /// Size of the target's minimal complete DSFA.
  std::size_t residual_count = 0;
  std::size_t prime_residual_count = 0;
  LearnerKind learner = LearnerKind::Rsfa;
  std::uint64_t eqs = 0;
  std::uint64_t mqs_raw = 0;
  std::uint64_t mqs_distinct = 0;
  std::size_t final_states = 0;
  std::size_t table_u = 0;
  std::size_t table_v = 0;
  double wall_ms = 0.0;
  /// Target exceeded the determinization cap; counts are zero.
  bool skipped = false;

  std::string to_json() const;
};

struct TargetInfo {
  std::size_t residual_count = 0;
  std::size_t prime_residual_count = 0;
  bool skipped = false;
};

/// Residual and prime-residual counts, or skipped when the cap is exceeded.
TargetInfo analyze_target(const Sfa& target, std::size_t cap = kDefaultDeterminizationCap);

/// Learns `target` once and fills a record. Learner guards propagate.
TrialRecord run_trial(const Sfa& target, const TargetInfo& info, LearnerKind kind,
                      std::uint64_t trial, std::uint64_t seed, const LearnerOptions& options = {},
                      bool record_time = true);

struct BenchConfig {
  std::size_t trials = 500;
  GenParams params;
  std::vector<LearnerKind> learners{LearnerKind::Rsfa, LearnerKind::MatStar};
  std::size_t jobs = 1;
  bool record_time = true;
  std::size_t cap = kDefaultDeterminizationCap;
};

/// Trial t learns random_sfa(params with seed derive_seed(params.seed, t))
/// with every configured learner. Rows come out in (trial, learner) order
/// whatever the number of worker threads.
std::vector<TrialRecord> run_bench(const BenchConfig& config);

std::string csv_header();
std::string to_csv_row(const TrialRecord& r);
void write_csv(std::ostream& os, const std::vector<TrialRecord>& records);
/// Throws ParseError on a malformed header or row.
std::vector<TrialRecord> read_csv(std::istream& is);

struct MeanCi {
  double mean = 0.0;
  /// 1.96·s/√k with the sample standard deviation s; absent when k < 2.
  std::optional<double> half_width;
};

struct SummaryRow {
  std::size_t residual_count = 0;
  LearnerKind learner = LearnerKind::Rsfa;
  std::size_t samples = 0;
  MeanCi eqs;
  MeanCi mqs;
  MeanCi table_u;
  MeanCi table_v;
};

MeanCi mean_ci(const std::vector<double>& xs);

/// Groups non-skipped rows by (residual_count, learner), sorted ascending.
std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records, CountMode mode);
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);
void write_summary_text(std::ostream& os, const std::vector<SummaryRow>& rows);

}  // namespace rsfa
