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

#include "rsfa/learner.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rsfa/error.hpp"

namespace rsfa {

RsfaLearner::RsfaLearner(Teacher& teacher, SessionFactory factory, LearnerOptions options)
    : teacher_(&teacher),
      factory_(std::move(factory)),
      options_(std::move(options)),
      domain_(teacher.target().domain()),
      table_(teacher),
      hyp_(domain_, 0) {}

void RsfaLearner::log(std::string_view kind, const std::string& payload) {
  if (options_.log) options_.log->record(kind, payload);
}

void RsfaLearner::tick(std::string_view what) {
  if (++iterations_ > options_.max_iterations) {
    throw GuardTripped("learner exceeded " + std::to_string(options_.max_iterations) +
                       " iterations (" + std::string(what) + ")");
  }
}

bool RsfaLearner::mq_from(State q, const Word& x) {
  return teacher_->mq(concat(state_words_[q], x));
}

const Row& RsfaLearner::temp_row(State q, Char a) {
  if (cache_version_ != table_.version()) {
    temp_rows_.clear();
    cache_version_ = table_.version();
  }
  auto key = std::make_pair(state_u_[q], a);
  auto it = temp_rows_.find(key);
  if (it != temp_rows_.end()) return it->second;
  const auto& suffixes = table_.suffixes();
  Row r(suffixes.size());
  for (std::size_t j = 0; j < suffixes.size(); ++j) {
    r.set(j, teacher_->mq(concat(state_words_[q], a, suffixes[j])));
  }
  return temp_rows_.emplace(key, std::move(r)).first->second;
}

void RsfaLearner::extend(const std::optional<Word>& u, const std::optional<Word>& v,
                         std::string_view why) {
  bool grew = false;
  if (u && table_.add_prefix(*u)) {
    grew = true;
    log("EXTEND_U", to_string(*u) + " " + std::string(why));
  }
  if (v && table_.add_suffix(*v)) {
    grew = true;
    log("EXTEND_V", to_string(*v) + " " + std::string(why));
  }
  if (!grew) throw GuardTripped("table extension was a no-op (" + std::string(why) + ")");
  teacher_->note_table_extension();
  if (options_.hooks.on_extension) options_.hooks.on_extension(table_);
}

bool RsfaLearner::build_hypothesis() {
  tick("build");
  // One state per distinct prime row, represented by its length-lex least u.
  const auto& primes = table_.prime_rows();
  std::vector<std::size_t> reps;
  for (const auto& prime : primes) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < table_.prefixes().size(); ++i) {
      if (table_.row(i) != prime) continue;
      if (!best || length_lex_less(table_.prefixes()[i], table_.prefixes()[*best])) best = i;
    }
    reps.push_back(*best);
  }
  std::sort(reps.begin(), reps.end(), [&](std::size_t a, std::size_t b) {
    return length_lex_less(table_.prefixes()[a], table_.prefixes()[b]);
  });

  const std::size_t n = reps.size();
  state_u_ = reps;
  state_words_.clear();
  for (auto i : reps) state_words_.push_back(table_.prefixes()[i]);
  hyp_ = Sfa(domain_, n);
  const Row& eps_row = table_.row(0);
  for (State q = 0; q < n; ++q) {
    if (state_row(q).is_subset_of(eps_row)) hyp_.set_initial(q);
    if (state_row(q).test(0)) hyp_.set_final(q);
  }
  sessions_.clear();
  sessions_.resize(n * n);
  for (State q = 0; q < n; ++q) {
    for (State to = 0; to < n; ++to) {
      sessions_[q * n + to] = factory_(hyp_.domain());
      if (!update_transition(q, to)) return false;
    }
  }
  return true;
}

bool RsfaLearner::update_transition(State q, State to) {
  auto& sess = session(q, to);
  for (;;) {
    auto action = sess.next_action();
    if (auto* eq = std::get_if<EqAction>(&action)) {
      hyp_.set_edge(q, to, eq->hypothesis);
      return true;
    }
    const Char a = std::get<MqAction>(action).c;
    const Row temp = temp_row(q, a);
    if (table_.is_new_prime(temp)) {
      extend(concat(state_words_[q], Word{a}), std::nullopt, "new-prime");
      return false;
    }
    sess.answer_mq(state_row(to).is_subset_of(temp));
  }
}

bool RsfaLearner::counterexample_to_session(State q, State to, Char a, bool value,
                                            std::string_view why) {
  tick("repair");
  const Predicate before = hyp_.edge(q, to);
  log("REPAIR", std::to_string(q) + "->" + std::to_string(to) + " " + std::to_string(a) +
                    (value ? " +" : " -") + " " + std::string(why));
  session(q, to).provide_counterexample(a, value);
  if (!update_transition(q, to)) return false;
  if (hyp_.edge(q, to) == before) {
    throw GuardTripped("transition repair left the predicate unchanged");
  }
  return true;
}

RsfaLearner::Check RsfaLearner::check_condition1() {
  const std::size_t n = hyp_.num_states();
  for (State q = 0; q < n; ++q) {
    for (State q2 = 0; q2 < n; ++q2) {
      if (q == q2 || !state_row(q).is_subset_of(state_row(q2))) continue;
      for (State x = 0; x < n; ++x) {
        const Predicate diff = hyp_.edge(q, x) - hyp_.edge(q2, x);
        if (diff.is_empty()) continue;
        const Char a = *diff.witness();
        log("VIOLATION", "condition1 " + std::to_string(q) + "," + std::to_string(q2) + "," +
                             std::to_string(x) + " " + std::to_string(a));
        if (!state_row(x).is_subset_of(temp_row(q, a))) {
          return outcome(counterexample_to_session(q, x, a, false, "condition1"));
        }
        if (state_row(x).is_subset_of(temp_row(q2, a))) {
          return outcome(counterexample_to_session(q2, x, a, true, "condition1"));
        }
        // row(x) ⊆ temp_row(q, a) but not ⊆ temp_row(q2, a): a·v separates q from q2.
        const Row& rx = state_row(x);
        const Row& t2 = temp_row(q2, a);
        for (std::size_t j = 0; j < table_.suffixes().size(); ++j) {
          if (rx.test(j) && !t2.test(j)) {
            extend(std::nullopt, concat(Word{a}, table_.suffixes()[j]), "condition1");
            return Check::Extended;
          }
        }
        throw Error("condition 1: no separating suffix found");
      }
    }
  }
  return Check::Ok;
}

RsfaLearner::Check RsfaLearner::check_condition2() {
  std::vector<std::size_t> order(table_.prefixes().size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return length_lex_less(table_.prefixes()[a], table_.prefixes()[b]);
  });
  for (std::size_t ui : order) {
    const Word& u = table_.prefixes()[ui];
    if (u.empty()) continue;
    const Row& ru = table_.row(ui);
    const StateSet reached = hyp_.run(hyp_.initial(), u);
    for (auto x = reached.find_first(); x != StateSet::npos; x = reached.find_next(x)) {
      if (state_row(x).is_subset_of(ru)) continue;
      const Word u1 = prefix(u, u.size() - 1);
      const Char a = u.back();
      log("VIOLATION", "condition2 " + to_string(u) + " " + std::to_string(x));
      const StateSet before = hyp_.run(hyp_.initial(), u1);
      std::optional<State> x1;
      for (auto y = before.find_first(); y != StateSet::npos; y = before.find_next(y)) {
        if (hyp_.edge(y, x).contains(a)) {
          x1 = y;
          break;
        }
      }
      if (!x1) throw Error("condition 2: no predecessor state found");
      if (!state_row(x).is_subset_of(temp_row(*x1, a))) {
        return outcome(counterexample_to_session(*x1, x, a, false, "condition2"));
      }
      const Row& t = temp_row(*x1, a);
      for (std::size_t j = 0; j < table_.suffixes().size(); ++j) {
        if (t.test(j) && !ru.test(j)) {
          extend(std::nullopt, concat(Word{a}, table_.suffixes()[j]), "condition2");
          return Check::Extended;
        }
      }
      throw Error("condition 2: no separating suffix found");
    }
  }
  return Check::Ok;
}

RsfaLearner::Check RsfaLearner::check_condition3() {
  const std::size_t n = hyp_.num_states();
  for (std::size_t j = 1; j < table_.suffixes().size(); ++j) {
    const Word v = table_.suffixes()[j];
    bool violated = false;
    for (State q = 0; q < n && !violated; ++q) {
      violated = table_says(q, j) != hyp_.accepts_from(q, v);
    }
    if (!violated) continue;
    log("VIOLATION", "condition3 " + to_string(v));

    const BadSuffix bad = find_bad_suffix(v);
    const Row temp = temp_row(bad.q2, bad.a);
    for (State q3 = 0; q3 < n; ++q3) {
      const bool included = state_row(q3).is_subset_of(temp);
      const bool in_delta = hyp_.edge(bad.q2, q3).contains(bad.a);
      if (included != in_delta) {
        return outcome(counterexample_to_session(bad.q2, q3, bad.a, included, "condition3"));
      }
    }
    bool suffix_only = !mq_from(bad.q2, concat(Word{bad.a}, bad.rest));
    for (std::size_t ui = 0; ui < table_.prefixes().size() && !suffix_only; ++ui) {
      if (table_.row(ui) == temp && teacher_->mq(concat(table_.prefixes()[ui], bad.rest))) {
        suffix_only = true;
      }
    }
    if (suffix_only) {
      extend(std::nullopt, bad.rest, "condition3");
    } else {
      extend(concat(state_words_[bad.q2], Word{bad.a}), bad.rest, "condition3");
    }
    return Check::Extended;
  }
  return Check::Ok;
}

bool RsfaLearner::confirm_conditions() {
  for (;;) {
    Check c = check_condition1();
    if (c == Check::Ok) c = check_condition2();
    if (c == Check::Ok) c = check_condition3();
    if (c == Check::Ok) return true;
    if (c == Check::Extended) return false;
  }
}

RsfaLearner::BadSuffix RsfaLearner::find_bad_suffix(const Word& v) {
  const std::size_t n = hyp_.num_states();
  // P(i): every state agrees with the teacher on v[i, |v|).
  auto holds = [&](std::size_t i) {
    const Word x = suffix(v, i);
    for (State q = 0; q < n; ++q) {
      if (mq_from(q, x) != hyp_.accepts_from(q, x)) return false;
    }
    return true;
  };
  if (holds(0)) throw PreconditionError("find_bad_suffix: every state agrees on " + to_string(v));
  if (!holds(v.size())) throw Error("find_bad_suffix: states disagree on the empty suffix");
  std::size_t lo = 0, hi = v.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (holds(mid) ? hi : lo) = mid;
  }
  BadSuffix out{v[lo], suffix(v, lo + 1), 0};
  const Word av = suffix(v, lo);
  bool found = false;
  for (State q = 0; q < n && !found; ++q) {
    if (mq_from(q, av) != hyp_.accepts_from(q, av)) {
      out.q2 = q;
      found = true;
    }
  }
  if (!found) throw Error("find_bad_suffix: binary search lost its invariant");
  if (options_.hooks.on_bad_suffix) {
    options_.hooks.on_bad_suffix(BadSuffixRecord{v, lo, out.q2, hyp_, state_words_});
  }
  return out;
}

RsfaLearner::Split RsfaLearner::decompose_counterexample(const Word& w) {
  // f(i) = ⋁_{q ∈ δ(Q0, w[0,i))} MQ(q · w[i, |w|))
  auto f = [&](std::size_t i) {
    const StateSet reached = hyp_.run(hyp_.initial(), prefix(w, i));
    const Word rest = suffix(w, i);
    for (auto q = reached.find_first(); q != StateSet::npos; q = reached.find_next(q)) {
      if (mq_from(q, rest)) return true;
    }
    return false;
  };
  const bool first = f(0);
  if (first == f(w.size())) {
    throw PreconditionError("decompose_counterexample: endpoints agree on " + to_string(w));
  }
  std::size_t lo = 0, hi = w.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (f(mid) == first ? lo : hi) = mid;
  }
  if (options_.hooks.on_decompose) {
    options_.hooks.on_decompose(DecomposeRecord{w, lo, hyp_, state_words_});
  }
  return Split{prefix(w, lo), w[lo], suffix(w, lo + 1)};
}

bool RsfaLearner::process_counterexample(const Word& w) {
  tick("counterexample");
  log("CE", to_string(w));
  const bool target = teacher_->mq(w);
  bool via_initial = false;
  for (auto q = hyp_.initial().find_first(); q != StateSet::npos && !via_initial;
       q = hyp_.initial().find_next(q)) {
    via_initial = mq_from(q, w);
  }
  if (via_initial != target) {
    extend(std::nullopt, w, "initial-states");
    return false;
  }

  const Split s = decompose_counterexample(w);
  const Word av = concat(Word{s.a}, s.v);
  const StateSet before = hyp_.run(hyp_.initial(), s.u);
  bool positive = false;
  State q = 0;
  for (auto y = before.find_first(); y != StateSet::npos; y = before.find_next(y)) {
    if (mq_from(y, av)) {
      positive = true;
      q = y;
      break;
    }
  }

  if (positive) {
    const Row temp = temp_row(q, s.a);
    const StateSet after = hyp_.step(hyp_.singleton(q), s.a);
    for (State to = 0; to < hyp_.num_states(); ++to) {
      if (state_row(to).is_subset_of(temp) && !after.test(to)) {
        return counterexample_to_session(q, to, s.a, true, "counterexample+");
      }
    }
    bool suffix_only = false;
    for (std::size_t ui = 0; ui < table_.prefixes().size() && !suffix_only; ++ui) {
      if (table_.row(ui) == temp && teacher_->mq(concat(table_.prefixes()[ui], s.v))) {
        suffix_only = true;
      }
    }
    if (suffix_only) {
      extend(std::nullopt, s.v, "counterexample+");
    } else {
      extend(concat(state_words_[q], Word{s.a}), s.v, "counterexample+");
    }
    return false;
  }

  for (auto y = before.find_first(); y != StateSet::npos; y = before.find_next(y)) {
    const StateSet succ = hyp_.step(hyp_.singleton(y), s.a);
    for (auto to = succ.find_first(); to != StateSet::npos; to = succ.find_next(to)) {
      if (!mq_from(to, s.v)) continue;
      if (!state_row(to).is_subset_of(temp_row(y, s.a))) {
        return counterexample_to_session(y, to, s.a, false, "counterexample-");
      }
      extend(std::nullopt, s.v, "counterexample-");
      return false;
    }
  }
  throw Error("process_counterexample: decomposition found no responsible transition");
}

RunOutcome RsfaLearner::run() {
  bool valid = false;
  for (;;) {
    while (!valid) valid = build_hypothesis() && confirm_conditions();
    tick("equivalence query");
    auto ce = teacher_->eq(hyp_);
    if (!ce) break;
    valid = process_counterexample(*ce) && confirm_conditions();
  }
  RunOutcome out;
  out.result = hyp_;
  out.stats = teacher_->stats();
  out.table_u = table_.prefixes().size();
  out.table_v = table_.suffixes().size();
  out.state_words = state_words_;
  return out;
}

RunOutcome learn_rsfa(Teacher& teacher, const SessionFactory& factory, const LearnerOptions& options) {
  RsfaLearner learner(teacher, factory, options);
  return learner.run();
}

}  // namespace rsfa
