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
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rsfa/learner.hpp"

namespace rsfa {

/// Baseline learner for deterministic SFAs. States are the access strings in
/// U (all with distinct rows), a session per state pair learns
/// {a | row(q·a) = row(q')}, outgoing predicates are repaired into a
/// partition of the domain before every equivalence query, and
/// counterexamples are split by Rivest–Schapire binary search.
class MatStarLearner {
 public:
  MatStarLearner(Teacher& teacher, SessionFactory factory, LearnerOptions options = {});

  RunOutcome run();

  const ObservationTable& table() const { return table_; }
  const Sfa& hypothesis() const { return hyp_; }

 private:
  bool build_hypothesis();
  bool update_transition(State q, State to);
  bool enforce_partition();
  bool process_counterexample(const Word& w);
  /// State whose row equals row(q·a); nullopt after adding q·a to U.
  std::optional<State> class_of(State q, Char a);
  bool counterexample_to_session(State q, State to, Char a, bool value);
  void tick(std::string_view what);

  PredicateSession& session(State q, State to);

  Teacher* teacher_;
  SessionFactory factory_;
  LearnerOptions options_;
  Domain domain_;
  ObservationTable table_;
  Sfa hyp_;
  std::vector<std::unique_ptr<PredicateSession>> sessions_;
  std::uint64_t cache_version_ = static_cast<std::uint64_t>(-1);
  std::map<Row, State> state_of_row_;
  std::map<std::pair<State, Char>, std::optional<State>> class_cache_;
  /// Partial rows of q·a over a prefix of V.
  std::map<std::pair<State, Char>, Row> rows_;
  std::size_t iterations_ = 0;
};

RunOutcome learn_dsfa(Teacher& teacher, const SessionFactory& factory,
                      const LearnerOptions& options = {});

}  // namespace rsfa
