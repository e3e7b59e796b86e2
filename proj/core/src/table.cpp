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

#include "rsfa/table.hpp"

#include <set>
#include <sstream>

#include "rsfa/error.hpp"

namespace rsfa {

namespace {

bool is_prime_in(const Row& r, std::span<const Row> rows) {
  Row below(r.size());
  for (const auto& other : rows) {
    if (other.is_proper_subset_of(r)) below |= other;
  }
  return below != r;
}

}  // namespace

std::vector<Row> prime_rows_of(std::span<const Row> rows) {
  std::vector<Row> distinct;
  std::set<Row> seen;
  for (const auto& r : rows) {
    if (seen.insert(r).second) distinct.push_back(r);
  }
  std::vector<Row> out;
  for (const auto& r : distinct) {
    if (is_prime_in(r, distinct)) out.push_back(r);
  }
  return out;
}

ObservationTable::ObservationTable(MembershipOracle& oracle) : oracle_(&oracle) {
  prefixes_.push_back({});
  suffixes_.push_back({});
  prefix_ids_.emplace(Word{}, 0);
  suffix_ids_.emplace(Word{}, 0);
  rows_.emplace_back(1);
  rows_[0].set(0, oracle_->mq(Word{}));
  cells_filled_ = 1;
}

std::optional<std::size_t> ObservationTable::prefix_index(const Word& u) const {
  auto it = prefix_ids_.find(u);
  if (it == prefix_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ObservationTable::suffix_index(const Word& v) const {
  auto it = suffix_ids_.find(v);
  if (it == suffix_ids_.end()) return std::nullopt;
  return it->second;
}

bool ObservationTable::add_prefix(const Word& u) {
  if (prefix_ids_.contains(u)) return false;
  if (!prefix_ids_.contains(prefix(u, u.size() - 1))) {
    throw PreconditionError("adding " + to_string(u) + " would break prefix-closure of U");
  }
  Row r(suffixes_.size());
  for (std::size_t j = 0; j < suffixes_.size(); ++j) {
    r.set(j, oracle_->mq(concat(u, suffixes_[j])));
    ++cells_filled_;
  }
  prefix_ids_.emplace(u, prefixes_.size());
  prefixes_.push_back(u);
  rows_.push_back(std::move(r));
  invalidate();
  return true;
}

bool ObservationTable::add_suffix(const Word& v) {
  if (suffix_ids_.contains(v)) return false;
  for (std::size_t i = 0; i < prefixes_.size(); ++i) {
    rows_[i].push_back(oracle_->mq(concat(prefixes_[i], v)));
    ++cells_filled_;
  }
  suffix_ids_.emplace(v, suffixes_.size());
  suffixes_.push_back(v);
  invalidate();
  return true;
}

const Row& ObservationTable::row(const Word& u) const {
  auto idx = prefix_index(u);
  if (!idx) throw PreconditionError(to_string(u) + " is not in U");
  return rows_[*idx];
}

const std::vector<Row>& ObservationTable::distinct_rows() const {
  if (!distinct_cache_) {
    std::vector<Row> out;
    std::set<Row> seen;
    for (const auto& r : rows_) {
      if (seen.insert(r).second) out.push_back(r);
    }
    distinct_cache_ = std::move(out);
  }
  return *distinct_cache_;
}

const std::vector<Row>& ObservationTable::prime_rows() const {
  if (!prime_cache_) prime_cache_ = prime_rows_of(distinct_rows());
  return *prime_cache_;
}

bool ObservationTable::is_new_prime(const Row& temp) const {
  const auto& rows = distinct_rows();
  for (const auto& r : rows) {
    if (r == temp) return false;  // already a row: Prm unchanged
  }
  return is_prime_in(temp, rows);
}

MeasureTuple ObservationTable::measure(MeasureMode mode, Domain domain,
                                       MembershipOracle* side) const {
  MeasureTuple m;
  m.l_U = distinct_rows().size();
  m.p = prime_rows().size();
  if (mode == MeasureMode::Light) return m;
  if (side == nullptr) throw PreconditionError("full measure needs a side oracle");
  if (domain.size() > 256) throw PreconditionError("full measure needs a domain of at most 256 characters");

  std::set<Row> r_set(rows_.begin(), rows_.end());
  for (const auto& u : prefixes_) {
    for (Char a = domain.min; a <= domain.max; ++a) {
      Row r(suffixes_.size());
      for (std::size_t j = 0; j < suffixes_.size(); ++j) r.set(j, side->mq(concat(u, a, suffixes_[j])));
      r_set.insert(std::move(r));
    }
  }
  std::size_t strict = 0;
  for (const auto& r : r_set)
    for (const auto& r2 : r_set)
      if (r.is_proper_subset_of(r2)) ++strict;
  m.l = r_set.size();
  m.i = strict;
  return m;
}

std::string ObservationTable::dump_tsv() const {
  std::ostringstream os;
  os << 'U';
  for (const auto& v : suffixes_) os << '\t' << to_string(v);
  os << '\n';
  for (std::size_t i = 0; i < prefixes_.size(); ++i) {
    os << to_string(prefixes_[i]);
    for (std::size_t j = 0; j < suffixes_.size(); ++j) os << '\t' << (rows_[i].test(j) ? '+' : '-');
    os << '\n';
  }
  return os.str();
}

void ObservationTable::invalidate() {
  ++version_;
  distinct_cache_.reset();
  prime_cache_.reset();
}

}  // namespace rsfa
