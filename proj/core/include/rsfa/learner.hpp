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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rsfa/automata.hpp"
#include "rsfa/event_log.hpp"
#include "rsfa/predlearn.hpp"
#include "rsfa/table.hpp"
#include "rsfa/teacher.hpp"

namespace rsfa {

/// Snapshot handed to LearnerHooks::on_decompose after each counterexample
/// decomposition w = u·a·v with u = w[0, split).
struct DecomposeRecord {
  Word w;
  std::size_t split = 0;
  Sfa hypothesis;
  std::vector<Word> state_words;
};

/// Snapshot handed to LearnerHooks::on_bad_suffix: v[start] is the character
/// a, v[start + 1, end) the suffix v', q2 the offending state.
struct BadSuffixRecord {
  Word v;
  std::size_t start = 0;
  State q2 = 0;
  Sfa hypothesis;
  std::vector<Word> state_words;
};

struct LearnerHooks {
  std::function<void(const DecomposeRecord&)> on_decompose;
  std::function<void(const BadSuffixRecord&)> on_bad_suffix;
  /// Called after every strict table extension.
  std::function<void(const ObservationTable&)> on_extension;
};

struct LearnerOptions {
  std::size_t determinization_cap = kDefaultDeterminizationCap;
  /// Bound on hypothesis rebuilds + equivalence queries + repairs.
  std::size_t max_iterations = 1'000'000;
  EventLog* log = nullptr;
  LearnerHooks hooks;
};

struct RunOutcome {
  Sfa result;
  QueryStats stats;
  std::size_t table_u = 0;
  std::size_t table_v = 0;
  /// Representative string of each state of `result`.
  std::vector<Word> state_words;
};

/// Query learner for residual SFAs. Builds hypotheses from the prime rows of
/// an observation table, learns each transition predicate with its own
/// predicate-learner session, repairs the hypothesis until the three
/// consistency conditions hold, and processes counterexamples by binary
/// search. Every operation that extends the table returns false (the null
/// signal) and the hypothesis is rebuilt from scratch with fresh sessions.
class RsfaLearner {
 public:
  RsfaLearner(Teacher& teacher, SessionFactory factory, LearnerOptions options = {});

  RunOutcome run();

  bool build_hypothesis();
  /// Drives the session of (q, to) until it proposes a predicate, answering
  /// its probes on a with row(to) ⊆ temp_row(q, a).
  bool update_transition(State q, State to);
  /// Checks the three conditions and repairs transitions until they hold.
  bool confirm_conditions();
  bool process_counterexample(const Word& w);

  struct Split {
    Word u;
    Char a = 0;
    Word v;
  };
  /// Requires ⋁_{q∈Q0} MQ(q·w) = MQ(w) and w misclassified by the hypothesis.
  Split decompose_counterexample(const Word& w);

  struct BadSuffix {
    Char a = 0;
    Word rest;
    State q2 = 0;
  };
  /// Requires some state q with MQ(q·v) ≠ [v ∈ L_q].
  BadSuffix find_bad_suffix(const Word& v);

  /// {v ∈ V | MQ(q·a·v) = +}, cached until the table changes.
  const Row& temp_row(State q, Char a);
  const Row& state_row(State q) const { return table_.row(state_u_[q]); }

  const ObservationTable& table() const { return table_; }
  const Sfa& hypothesis() const { return hyp_; }
  const std::vector<Word>& state_words() const { return state_words_; }
  PredicateSession& session(State q, State to) { return *sessions_.at(q * hyp_.num_states() + to); }
  /// Overwrites a transition predicate behind the session's back.
  void set_edge_for_testing(State q, State to, const Predicate& p) { hyp_.set_edge(q, to, p); }

 private:
  bool mq_from(State q, const Word& x);
  bool table_says(State q, std::size_t v_index) const { return state_row(q).test(v_index); }
  bool counterexample_to_session(State q, State to, Char a, bool value, std::string_view why);
  void extend(const std::optional<Word>& u, const std::optional<Word>& v, std::string_view why);
  void tick(std::string_view what);
  void log(std::string_view kind, const std::string& payload);

  enum class Check { Ok, Repaired, Extended };
  Check check_condition1();
  Check check_condition2();
  Check check_condition3();
  static Check outcome(bool still_valid) { return still_valid ? Check::Repaired : Check::Extended; }

  Teacher* teacher_;
  SessionFactory factory_;
  LearnerOptions options_;
  Domain domain_;
  ObservationTable table_;

  Sfa hyp_;
  std::vector<std::size_t> state_u_;
  std::vector<Word> state_words_;
  std::vector<std::unique_ptr<PredicateSession>> sessions_;

  std::uint64_t cache_version_ = 0;
  std::map<std::pair<std::size_t, Char>, Row> temp_rows_;
  std::size_t iterations_ = 0;
};

/// Runs RsfaLearner to completion.
RunOutcome learn_rsfa(Teacher& teacher, const SessionFactory& factory,
                      const LearnerOptions& options = {});

}  // namespace rsfa
