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

#include "rsfa/sfa.hpp"

#include <string>

#include "rsfa/error.hpp"

namespace rsfa {

Sfa::Sfa(Domain domain, std::size_t num_states)
    : domain_(domain), initial_(num_states), final_(num_states), out_(num_states) {
  if (domain.min > domain.max) throw DomainError("domain has min > max");
}

State Sfa::add_state() {
  out_.emplace_back();
  initial_.push_back(false);
  final_.push_back(false);
  return out_.size() - 1;
}

State Sfa::check(State q) const {
  if (q >= out_.size()) throw PreconditionError("unknown state " + std::to_string(q));
  return q;
}

void Sfa::set_initial(State q, bool value) { initial_.set(check(q), value); }
void Sfa::set_final(State q, bool value) { final_.set(check(q), value); }

void Sfa::set_initial_set(const StateSet& s) {
  if (s.size() != num_states()) throw PreconditionError("state set size mismatch");
  initial_ = s;
}

void Sfa::set_edge(State from, State to, const Predicate& p) {
  check(to);
  auto& row = out_[check(from)];
  if (p.is_empty()) {
    row.erase(to);
    return;
  }
  if (!(p.domain() == domain_)) throw DomainError("edge predicate over a different domain");
  row.insert_or_assign(to, p);
}

void Sfa::add_to_edge(State from, State to, const Predicate& p) {
  set_edge(from, to, edge(from, to) | p);
}

Predicate Sfa::edge(State from, State to) const {
  check(to);
  const auto& row = out_[check(from)];
  auto it = row.find(to);
  return it == row.end() ? Predicate::bottom(domain_) : it->second;
}

std::size_t Sfa::num_edges() const {
  std::size_t n = 0;
  for (const auto& row : out_) n += row.size();
  return n;
}

StateSet Sfa::singleton(State q) const {
  StateSet s(num_states());
  s.set(check(q));
  return s;
}

void Sfa::step_into(const StateSet& qs, Char a, StateSet& next) const {
  next.reset();
  for (auto q = qs.find_first(); q != StateSet::npos; q = qs.find_next(q)) {
    for (const auto& [to, p] : out_[q]) {
      if (!next.test(to) && p.contains(a)) next.set(to);
    }
  }
}

StateSet Sfa::step(const StateSet& qs, Char a) const {
  if (!domain_.contains(a)) throw DomainError("character outside domain");
  if (qs.size() != num_states()) throw PreconditionError("state set size mismatch");
  StateSet next(num_states());
  step_into(qs, a, next);
  return next;
}

StateSet Sfa::run(const StateSet& qs, std::span<const Char> w) const {
  if (qs.size() != num_states()) throw PreconditionError("state set size mismatch");
  StateSet cur = qs;
  StateSet next(num_states());
  for (Char a : w) {
    if (!domain_.contains(a)) throw DomainError("character outside domain");
    if (cur.none()) continue;
    step_into(cur, a, next);
    cur.swap(next);
  }
  return cur;
}

bool Sfa::accepts(std::span<const Char> w) const { return intersects_final(run(initial_, w)); }

bool Sfa::accepts_from(State q, std::span<const Char> w) const {
  return intersects_final(run(singleton(q), w));
}

bool Sfa::is_deterministic() const {
  if (initial_.count() != 1) return false;
  for (const auto& row : out_) {
    Predicate seen = Predicate::bottom(domain_);
    for (const auto& [to, p] : row) {
      if (!(seen & p).is_empty()) return false;
      seen |= p;
    }
    if (!seen.is_top()) return false;
  }
  return true;
}

State Sfa::successor(State q, Char a) const {
  for (const auto& [to, p] : out_[check(q)]) {
    if (p.contains(a)) return to;
  }
  throw PreconditionError("no successor: automaton is not complete");
}

}  // namespace rsfa
