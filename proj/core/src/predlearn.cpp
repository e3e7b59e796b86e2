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

#include "rsfa/predlearn.hpp"

#include <vector>

#include "rsfa/error.hpp"

namespace rsfa {

namespace {

Predicate predicate_from_samples(const std::map<Char, bool>& samples, Domain domain) {
  std::vector<Interval> ivs;
  std::optional<Char> run_start;
  Char last = 0;
  for (const auto& [c, v] : samples) {
    if (v && !run_start) run_start = c;
    if (!v && run_start) {
      ivs.push_back({*run_start, last});
      run_start.reset();
    }
    last = c;
  }
  if (run_start) ivs.push_back({*run_start, last});
  return Predicate::normalize(ivs, domain);
}

}  // namespace

IntervalSession::IntervalSession(Domain domain) : domain_(domain) {
  if (domain.min > domain.max) throw DomainError("domain has min > max");
}

SessionAction IntervalSession::next_action() {
  if (pending_mq_) return MqAction{*pending_mq_};
  if (awaiting_counterexample_) return EqAction{*hypothesis_};

  if (!samples_.contains(domain_.min)) {
    pending_mq_ = domain_.min;
  } else if (!samples_.contains(domain_.max)) {
    pending_mq_ = domain_.max;
  } else {
    for (auto it = samples_.begin(), next = std::next(it); next != samples_.end(); ++it, ++next) {
      if (it->second != next->second && next->first - it->first > 1) {
        pending_mq_ = it->first + (next->first - it->first) / 2;
        break;
      }
    }
  }
  if (pending_mq_) {
    ++counters_.mqs;
    return MqAction{*pending_mq_};
  }
  hypothesis_ = implied_predicate();
  awaiting_counterexample_ = true;
  ++counters_.eqs;
  return EqAction{*hypothesis_};
}

void IntervalSession::answer_mq(bool value) {
  if (!pending_mq_) throw ProtocolError("answer_mq without a pending Mq");
  samples_[*pending_mq_] = value;
  pending_mq_.reset();
}

void IntervalSession::provide_counterexample(Char c, bool value) {
  if (!awaiting_counterexample_) throw ProtocolError("counterexample without a pending Eq");
  if (!domain_.contains(c)) throw DomainError("counterexample outside domain");
  if (hypothesis_->contains(c) == value) {
    throw ProtocolError("counterexample " + std::to_string(c) + " agrees with the hypothesis");
  }
  samples_[c] = value;
  awaiting_counterexample_ = false;
}

const Predicate& IntervalSession::current_hypothesis() const {
  if (!hypothesis_) throw ProtocolError("no Eq has been made yet");
  return *hypothesis_;
}

Predicate IntervalSession::implied_predicate() const {
  return predicate_from_samples(samples_, domain_);
}

EnumerationSession::EnumerationSession(Domain domain, std::size_t max_size) : domain_(domain) {
  if (domain.min > domain.max) throw DomainError("domain has min > max");
  if (domain.size() > max_size) throw PreconditionError("domain too large to enumerate");
}

SessionAction EnumerationSession::next_action() {
  if (pending_mq_) return MqAction{*pending_mq_};
  if (awaiting_counterexample_) return EqAction{*hypothesis_};
  const Char next = samples_.empty() ? domain_.min : samples_.rbegin()->first + 1;
  if (samples_.size() < domain_.size() && next <= domain_.max) {
    pending_mq_ = next;
    ++counters_.mqs;
    return MqAction{next};
  }
  hypothesis_ = predicate_from_samples(samples_, domain_);
  awaiting_counterexample_ = true;
  ++counters_.eqs;
  return EqAction{*hypothesis_};
}

void EnumerationSession::answer_mq(bool value) {
  if (!pending_mq_) throw ProtocolError("answer_mq without a pending Mq");
  samples_[*pending_mq_] = value;
  pending_mq_.reset();
}

void EnumerationSession::provide_counterexample(Char c, bool value) {
  if (!awaiting_counterexample_) throw ProtocolError("counterexample without a pending Eq");
  if (!domain_.contains(c)) throw DomainError("counterexample outside domain");
  if (hypothesis_->contains(c) == value) {
    throw ProtocolError("counterexample " + std::to_string(c) + " agrees with the hypothesis");
  }
  if (auto it = samples_.find(c); it != samples_.end() && it->second != value) {
    throw ProtocolError("counterexample " + std::to_string(c) + " contradicts an earlier answer");
  }
  samples_[c] = value;
  awaiting_counterexample_ = false;
}

const Predicate& EnumerationSession::current_hypothesis() const {
  if (!hypothesis_) throw ProtocolError("no Eq has been made yet");
  return *hypothesis_;
}

SessionFactory interval_session_factory() {
  return [](Domain d) { return std::make_unique<IntervalSession>(d); };
}

SessionFactory enumeration_session_factory() {
  return [](Domain d) { return std::make_unique<EnumerationSession>(d); };
}

}  // namespace rsfa
