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

#include "rsfa/algebra.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "rsfa/error.hpp"

namespace rsfa {
namespace {

// Keeps hi + 1 and lo - 1 representable.
constexpr Char kEndpointLimit = Char{1} << 62;

void check_domain(const Domain& d) {
  if (d.min > d.max) throw DomainError("domain has min > max");
  if (d.min <= -kEndpointLimit || d.max >= kEndpointLimit)
    throw DomainError("domain endpoints exceed supported magnitude");
}

}  // namespace

Domain Domain::int32() {
  return Domain{std::numeric_limits<std::int32_t>::min(),
                std::numeric_limits<std::int32_t>::max()};
}

std::uint64_t Domain::size() const {
  return static_cast<std::uint64_t>(max - min) + 1;
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ']';
  return os.str();
}

Predicate Predicate::normalize(std::span<const Interval> raw, Domain domain) {
  check_domain(domain);
  std::vector<Interval> v(raw.begin(), raw.end());
  for (const auto& iv : v) {
    if (iv.lo > iv.hi) throw DomainError("interval with lo > hi");
    if (!domain.contains(iv.lo) || !domain.contains(iv.hi))
      throw DomainError("interval endpoint outside domain");
  }
  std::sort(v.begin(), v.end());
  std::vector<Interval> out;
  for (const auto& iv : v) {
    if (!out.empty() && iv.lo <= out.back().hi + 1) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return Predicate(domain, std::move(out));
}

Predicate Predicate::bottom(Domain domain) {
  check_domain(domain);
  return Predicate(domain, {});
}

Predicate Predicate::top(Domain domain) {
  check_domain(domain);
  return Predicate(domain, {Interval{domain.min, domain.max}});
}

Predicate Predicate::range(Domain domain, Char lo, Char hi) {
  const Interval iv{lo, hi};
  return normalize(std::span<const Interval>(&iv, 1), domain);
}

bool Predicate::is_top() const {
  return intervals_.size() == 1 && intervals_[0].lo == domain_.min &&
         intervals_[0].hi == domain_.max;
}

std::optional<Char> Predicate::witness() const {
  if (intervals_.empty()) return std::nullopt;
  return intervals_.front().lo;
}

bool Predicate::contains(Char c) const {
  if (!domain_.contains(c)) throw DomainError("character outside domain");
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), c,
      [](Char x, const Interval& iv) { return x < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return c <= it->hi;
}

bool Predicate::is_subset_of(const Predicate& other) const {
  require_same_domain(other);
  return (*this - other).is_empty();
}

std::uint64_t Predicate::cardinality() const {
  std::uint64_t n = 0;
  for (const auto& iv : intervals_) n += static_cast<std::uint64_t>(iv.hi - iv.lo) + 1;
  return n;
}

std::size_t Predicate::border_count() const {
  std::size_t k = 0;
  for (const auto& iv : intervals_) {
    ++k;                           // iv.lo is in S, iv.lo - 1 is not
    if (iv.hi < domain_.max) ++k;  // iv.hi + 1 is not in S, iv.hi is
  }
  return k;
}

Predicate Predicate::operator&(const Predicate& other) const {
  require_same_domain(other);
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  const auto& a = intervals_;
  const auto& b = other.intervals_;
  while (i < a.size() && j < b.size()) {
    const Char lo = std::max(a[i].lo, b[j].lo);
    const Char hi = std::min(a[i].hi, b[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return Predicate(domain_, std::move(out));
}

Predicate Predicate::operator|(const Predicate& other) const {
  require_same_domain(other);
  std::vector<Interval> all;
  all.reserve(intervals_.size() + other.intervals_.size());
  std::merge(intervals_.begin(), intervals_.end(), other.intervals_.begin(),
             other.intervals_.end(), std::back_inserter(all));
  std::vector<Interval> out;
  for (const auto& iv : all) {
    if (!out.empty() && iv.lo <= out.back().hi + 1) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return Predicate(domain_, std::move(out));
}

Predicate Predicate::operator~() const {
  std::vector<Interval> out;
  Char next = domain_.min;
  for (const auto& iv : intervals_) {
    if (iv.lo > next) out.push_back({next, iv.lo - 1});
    next = iv.hi + 1;
  }
  if (next <= domain_.max) out.push_back({next, domain_.max});
  return Predicate(domain_, std::move(out));
}

Predicate Predicate::operator-(const Predicate& other) const {
  return *this & ~other;
}

std::string Predicate::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i) os << ',';
    os << '[' << intervals_[i].lo << ',' << intervals_[i].hi << ']';
  }
  os << ']';
  return os.str();
}

void Predicate::require_same_domain(const Predicate& other) const {
  if (!(domain_ == other.domain_)) throw DomainError("predicates over different domains");
}

Predicate combine(BoolOp op, const Predicate& a, const Predicate* b) {
  if (op == BoolOp::Not) return ~a;
  if (b == nullptr) throw PreconditionError("binary connective needs two operands");
  return op == BoolOp::And ? (a & *b) : (a | *b);
}

Predicate IntervalAlgebra::at_most(Char k) const {
  if (k < domain_.min) return bottom();
  return Predicate::range(domain_, domain_.min, std::min(k, domain_.max));
}

}  // namespace rsfa
