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
#include <variant>

#include "rsfa/algebra.hpp"

namespace rsfa {

struct MqAction {
  Char c;
};
struct EqAction {
  Predicate hypothesis;
};
using SessionAction = std::variant<MqAction, EqAction>;

struct SessionCounters {
  std::size_t mqs = 0;
  std::size_t eqs = 0;
};

/// A MAT learner for one predicate of the underlying algebra, driven as a
/// state machine: it emits membership probes (Mq) until it can propose a
/// hypothesis (Eq), then waits for a counterexample. Calling next_action()
/// again while waiting re-emits the same Eq without counting it.
class PredicateSession {
 public:
  virtual ~PredicateSession() = default;

  virtual SessionAction next_action() = 0;
  /// Throws ProtocolError unless the last action was an Mq.
  virtual void answer_mq(bool value) = 0;
  /// Reports that `c` belongs to the target set iff `value`. Throws
  /// ProtocolError unless an Eq is pending and its hypothesis classifies `c`
  /// as !value.
  virtual void provide_counterexample(Char c, bool value) = 0;
  /// Predicate of the most recent Eq. Throws ProtocolError before the first.
  virtual const Predicate& current_hypothesis() const = 0;
  virtual SessionCounters counters() const = 0;
};

using SessionFactory = std::function<std::unique_ptr<PredicateSession>(Domain)>;

/// Learns an arbitrary subset of an ordered domain by binary search on its
/// borders. The domain endpoints are probed first; afterwards a probe is only
/// issued at the midpoint between two adjacent samples of differing value.
/// With K borders it uses at most K + 1 Eqs and 2 + K·⌈log₂|Σ|⌉ Mqs.
class IntervalSession final : public PredicateSession {
 public:
  explicit IntervalSession(Domain domain);

  SessionAction next_action() override;
  void answer_mq(bool value) override;
  void provide_counterexample(Char c, bool value) override;
  const Predicate& current_hypothesis() const override;
  SessionCounters counters() const override { return counters_; }

  const std::map<Char, bool>& samples() const { return samples_; }
  /// Predicate implied by the samples: a run of equal samples denotes its
  /// whole span.
  Predicate implied_predicate() const;

 private:
  Domain domain_;
  std::map<Char, bool> samples_;
  std::optional<Char> pending_mq_;
  std::optional<Predicate> hypothesis_;
  bool awaiting_counterexample_ = false;
  SessionCounters counters_;
};

/// Probes every character of a small domain and proposes the exact set; the
/// predicate learner of a finite-alphabet (non-symbolic) residual learner.
class EnumerationSession final : public PredicateSession {
 public:
  /// Throws PreconditionError for domains larger than `max_size`.
  explicit EnumerationSession(Domain domain, std::size_t max_size = 4096);

  SessionAction next_action() override;
  void answer_mq(bool value) override;
  void provide_counterexample(Char c, bool value) override;
  const Predicate& current_hypothesis() const override;
  SessionCounters counters() const override { return counters_; }

 private:
  Domain domain_;
  std::map<Char, bool> samples_;
  std::optional<Char> pending_mq_;
  std::optional<Predicate> hypothesis_;
  bool awaiting_counterexample_ = false;
  SessionCounters counters_;
};

SessionFactory interval_session_factory();
SessionFactory enumeration_session_factory();

}  // namespace rsfa
