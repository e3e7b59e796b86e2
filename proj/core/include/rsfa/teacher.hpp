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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rsfa/automata.hpp"
#include "rsfa/event_log.hpp"
#include "rsfa/sfa.hpp"
#include "rsfa/word.hpp"

namespace rsfa {

/// Source of membership answers for an observation table.
class MembershipOracle {
 public:
  virtual ~MembershipOracle() = default;
  virtual bool mq(const Word& w) = 0;
};

/// Answers membership queries by simulating an automaton. Nothing is counted.
class SfaOracle final : public MembershipOracle {
 public:
  explicit SfaOracle(const Sfa& m) : m_(&m) {}
  bool mq(const Word& w) override { return m_->accepts(w); }

 private:
  const Sfa* m_;
};

struct QueryStats {
  std::uint64_t eqs = 0;
  /// Every mq() call.
  std::uint64_t mqs_raw = 0;
  /// Distinct strings asked.
  std::uint64_t mqs_distinct = 0;
  std::uint64_t table_extensions = 0;
  std::vector<std::size_t> counterexample_lengths;

  std::size_t max_counterexample_length() const;
  std::string to_json() const;
};

/// Simulated minimally adequate teacher for a target SFA. Membership answers
/// are cached; equivalence queries return a shortest counterexample.
class Teacher final : public MembershipOracle {
 public:
  explicit Teacher(Sfa target, std::size_t cap = kDefaultDeterminizationCap);

  bool mq(const Word& w) override;
  /// nullopt when L(hyp) equals the target language.
  std::optional<Word> eq(const Sfa& hyp);

  QueryStats stats() const { return stats_; }
  void note_table_extension() { ++stats_.table_extensions; }

  const Sfa& target() const { return target_; }
  const Sfa& target_dfa() const { return target_dfa_; }
  void set_event_log(EventLog* log) { log_ = log; }

 private:
  Sfa target_;
  Sfa target_dfa_;
  std::size_t cap_;
  std::unordered_map<Word, bool, WordHash> cache_;
  QueryStats stats_;
  EventLog* log_ = nullptr;
};

}  // namespace rsfa
