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

#include "rsfa/teacher.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "rsfa/error.hpp"

namespace rsfa {

std::size_t QueryStats::max_counterexample_length() const {
  if (counterexample_lengths.empty()) return 0;
  return *std::max_element(counterexample_lengths.begin(), counterexample_lengths.end());
}

std::string QueryStats::to_json() const {
  nlohmann::json j{{"eqs", eqs},
                   {"mqs_raw", mqs_raw},
                   {"mqs_distinct", mqs_distinct},
                   {"table_extensions", table_extensions},
                   {"counterexample_lengths", counterexample_lengths}};
  return j.dump();
}

Teacher::Teacher(Sfa target, std::size_t cap)
    : target_(std::move(target)), target_dfa_(minimal_dfa(target_, cap)), cap_(cap) {}

bool Teacher::mq(const Word& w) {
  ++stats_.mqs_raw;
  auto it = cache_.find(w);
  if (it == cache_.end()) {
    ++stats_.mqs_distinct;
    it = cache_.emplace(w, target_.accepts(w)).first;
    if (log_) log_->record("MQ", to_string(w) + (it->second ? " +" : " -"));
  }
  return it->second;
}

std::optional<Word> Teacher::eq(const Sfa& hyp) {
  if (!(hyp.domain() == target_.domain())) throw DomainError("hypothesis over a different domain");
  ++stats_.eqs;
  auto w = diff_witness_dfa(hyp.is_deterministic() ? hyp : determinize(hyp, cap_), target_dfa_);
  if (w) {
    if (hyp.accepts(*w) == target_.accepts(*w)) {
      throw Error("teacher produced a counterexample the hypothesis classifies correctly");
    }
    stats_.counterexample_lengths.push_back(w->size());
  }
  if (log_) log_->record("EQ", w ? "counterexample " + to_string(*w) : std::string("yes"));
  return w;
}

}  // namespace rsfa
