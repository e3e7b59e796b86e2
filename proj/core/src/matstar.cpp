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

#include "rsfa/matstar.hpp"

#include <string>

#include "rsfa/error.hpp"

namespace rsfa {

MatStarLearner::MatStarLearner(Teacher& teacher, SessionFactory factory, LearnerOptions options)
    : teacher_(&teacher),
      factory_(std::move(factory)),
      options_(std::move(options)),
      domain_(teacher.target().domain()),
      table_(teacher),
      hyp_(domain_, 0) {}

void MatStarLearner::tick(std::string_view what) {
  if (++iterations_ > options_.max_iterations) {
    throw GuardTripped("baseline learner exceeded " + std::to_string(options_.max_iterations) +
                       " iterations (" + std::string(what) + ")");
  }
}

std::optional<State> MatStarLearner::class_of(State q, Char a) {
  if (cache_version_ != table_.version()) {
    cache_version_ = table_.version();
    class_cache_.clear();
    state_of_row_.clear();
    for (State i = 0; i < table_.prefixes().size(); ++i) state_of_row_.emplace(table_.row(i), i);
  }
  auto key = std::make_pair(q, a);
  if (auto it = class_cache_.find(key); it != class_cache_.end()) return it->second;

  // Columns already asked for q·a stay valid; only new suffixes are queried.
  const Word qa = concat(table_.prefixes()[q], Word{a});
  const auto& suffixes = table_.suffixes();
  Row& r = rows_[key];
  for (std::size_t j = r.size(); j < suffixes.size(); ++j) r.push_back(teacher_->mq(concat(qa, suffixes[j])));
  if (auto it = state_of_row_.find(r); it != state_of_row_.end()) {
    class_cache_.emplace(key, it->second);
    return it->second;
  }
  table_.add_prefix(qa);
  teacher_->note_table_extension();
  if (options_.log) options_.log->record("EXTEND_U", to_string(qa));
  if (options_.hooks.on_extension) options_.hooks.on_extension(table_);
  return std::nullopt;
}

PredicateSession& MatStarLearner::session(State q, State to) {
  auto& slot = sessions_[q * hyp_.num_states() + to];
  if (!slot) {
    // Never run: every probe it would have issued was answered false.
    slot = factory_(domain_);
    for (;;) {
      auto action = slot->next_action();
      if (std::holds_alternative<EqAction>(action)) break;
      slot->answer_mq(false);
    }
  }
  return *slot;
}

bool MatStarLearner::build_hypothesis() {
  tick("build");
  const std::size_t n = table_.prefixes().size();
  hyp_ = Sfa(domain_, n);
  hyp_.set_initial(0);
  for (State q = 0; q < n; ++q) {
    if (table_.row(q).test(0)) hyp_.set_final(q);
  }
  sessions_.clear();
  sessions_.resize(n * n);
  for (State q = 0; q < n; ++q) {
    // A prototype session answered all-false stands in for every target
    // state that none of its probes lands in.
    auto proto = factory_(domain_);
    std::vector<bool> hit(n, false);
    Predicate proto_hyp = Predicate::bottom(domain_);
    for (;;) {
      auto action = proto->next_action();
      if (auto* eq = std::get_if<EqAction>(&action)) {
        proto_hyp = eq->hypothesis;
        break;
      }
      const auto cls = class_of(q, std::get<MqAction>(action).c);
      if (!cls) return false;
      hit[*cls] = true;
      proto->answer_mq(false);
    }
    for (State to = 0; to < n; ++to) {
      if (hit[to]) {
        sessions_[q * n + to] = factory_(domain_);
        if (!update_transition(q, to)) return false;
      } else {
        hyp_.set_edge(q, to, proto_hyp);
      }
    }
  }
  return true;
}

bool MatStarLearner::update_transition(State q, State to) {
  auto& sess = session(q, to);
  for (;;) {
    auto action = sess.next_action();
    if (auto* eq = std::get_if<EqAction>(&action)) {
      hyp_.set_edge(q, to, eq->hypothesis);
      return true;
    }
    const auto cls = class_of(q, std::get<MqAction>(action).c);
    if (!cls) return false;
    sess.answer_mq(*cls == to);
  }
}

bool MatStarLearner::counterexample_to_session(State q, State to, Char a, bool value) {
  tick("repair");
  if (options_.log) {
    options_.log->record("REPAIR", std::to_string(q) + "->" + std::to_string(to) + " " +
                                       std::to_string(a) + (value ? " +" : " -"));
  }
  session(q, to).provide_counterexample(a, value);
  return update_transition(q, to);
}

bool MatStarLearner::enforce_partition() {
  const std::size_t n = hyp_.num_states();
  // Repairs only touch edges out of q, so earlier states stay partitioned.
  for (State q = 0; q < n;) {
    bool repaired = false;
    Predicate covered = Predicate::bottom(domain_);
    for (const auto& [x, px] : hyp_.out_edges(q)) {
      const Predicate overlap = covered & px;
      if (!overlap.is_empty()) {
        const Char a = *overlap.witness();
        const auto cls = class_of(q, a);
        if (!cls) return false;
        std::optional<State> wrong;
        for (const auto& [y, py] : hyp_.out_edges(q)) {
          if (y > x) break;
          if (y != *cls && py.contains(a)) {
            wrong = y;
            break;
          }
        }
        if (!wrong) throw Error("partition repair found no wrong transition");
        if (!counterexample_to_session(q, *wrong, a, false)) return false;
        repaired = true;
        break;
      }
      covered |= px;
    }
    if (!repaired && !covered.is_top()) {
      const Char a = *(~covered).witness();
      const auto cls = class_of(q, a);
      if (!cls) return false;
      if (!counterexample_to_session(q, *cls, a, true)) return false;
      repaired = true;
    }
    if (!repaired) ++q;
  }
  return true;
}

bool MatStarLearner::process_counterexample(const Word& w) {
  tick("counterexample");
  if (options_.log) options_.log->record("CE", to_string(w));
  // f(i) = MQ(access(δ(w[0,i))) · w[i, |w|))
  auto f = [&](std::size_t i) {
    const State q = hyp_.run(hyp_.initial(), prefix(w, i)).find_first();
    return teacher_->mq(concat(table_.prefixes()[q], suffix(w, i)));
  };
  const bool first = f(0);
  if (first == f(w.size())) throw Error("baseline: counterexample endpoints agree");
  std::size_t lo = 0, hi = w.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (f(mid) == first ? lo : hi) = mid;
  }
  const Word u = prefix(w, lo);
  const Char a = w[lo];
  const Word v = suffix(w, lo + 1);
  const State q = hyp_.run(hyp_.initial(), u).find_first();
  const State t = hyp_.successor(q, a);

  const auto cls = class_of(q, a);
  if (!cls) return false;
  if (*cls != t) return counterexample_to_session(q, t, a, false);
  if (!table_.add_suffix(v)) throw GuardTripped("baseline: distinguishing suffix already present");
  teacher_->note_table_extension();
  if (options_.log) options_.log->record("EXTEND_V", to_string(v));
  if (options_.hooks.on_extension) options_.hooks.on_extension(table_);
  return false;
}

RunOutcome MatStarLearner::run() {
  bool valid = false;
  for (;;) {
    while (!valid) valid = build_hypothesis() && enforce_partition();
    tick("equivalence query");
    if (!hyp_.is_deterministic()) throw Error("baseline hypothesis is not a partition");
    auto ce = teacher_->eq(hyp_);
    if (!ce) break;
    valid = process_counterexample(*ce) && enforce_partition();
  }
  RunOutcome out;
  out.result = hyp_;
  out.stats = teacher_->stats();
  out.table_u = table_.prefixes().size();
  out.table_v = table_.suffixes().size();
  out.state_words = table_.prefixes();
  return out;
}

RunOutcome learn_dsfa(Teacher& teacher, const SessionFactory& factory, const LearnerOptions& options) {
  MatStarLearner learner(teacher, factory, options);
  return learner.run();
}

}  // namespace rsfa
