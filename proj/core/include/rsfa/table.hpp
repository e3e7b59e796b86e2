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
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rsfa/algebra.hpp"
#include "rsfa/teacher.hpp"
#include "rsfa/word.hpp"

namespace rsfa {

/// row(u) = {v ∈ V | T(uv) = +}, bit i standing for the i-th suffix of V in
/// insertion order.
using Row = boost::dynamic_bitset<>;

/// Rows of `rows` (taken as a set) that differ from the union of the rows
/// they strictly contain. The all-zero row is never prime. Output keeps the
/// first-occurrence order of `rows`.
std::vector<Row> prime_rows_of(std::span<const Row> rows);

/// Progress measures (l_U, l, p, i) of an observation table.
struct MeasureTuple {
  /// Distinct rows over U.
  std::size_t l_U = 0;
  /// |R| with R = {{v | uav ∈ L} | u ∈ U, a ∈ Σ ∪ {ε}}; full mode only.
  std::optional<std::size_t> l;
  /// Distinct prime rows.
  std::size_t p = 0;
  /// Strict-inclusion pairs in R; full mode only.
  std::optional<std::size_t> i;
};

enum class MeasureMode { Light, Full };

/// Observation table (U, V, T): U prefix-closed, V an arbitrary set of
/// suffixes (ε in both), T total on U·V. Cells are filled through the
/// oracle exactly once.
class ObservationTable {
 public:
  explicit ObservationTable(MembershipOracle& oracle);

  const std::vector<Word>& prefixes() const { return prefixes_; }
  const std::vector<Word>& suffixes() const { return suffixes_; }
  std::optional<std::size_t> prefix_index(const Word& u) const;
  std::optional<std::size_t> suffix_index(const Word& v) const;

  /// Inserts u into U and fills its row. Returns false, changing nothing,
  /// when u is already present. Throws PreconditionError when u's longest
  /// proper prefix is not in U.
  bool add_prefix(const Word& u);
  /// Inserts v into V and fills its column. Returns false when present.
  bool add_suffix(const Word& v);

  const Row& row(std::size_t u_index) const { return rows_.at(u_index); }
  /// Throws PreconditionError when u ∉ U.
  const Row& row(const Word& u) const;

  /// Distinct rows in first-occurrence order over U.
  const std::vector<Row>& distinct_rows() const;
  const std::vector<Row>& prime_rows() const;
  /// temp ∈ Prm(rows ∪ {temp}) \ Prm(rows)
  bool is_new_prime(const Row& temp) const;

  /// Light mode computes l_U and p only. Full mode also enumerates the
  /// alphabet (at most 256 characters) asking `side` for u·a·v; `side` is
  /// kept separate so measuring does not count as learning queries.
  MeasureTuple measure(MeasureMode mode, Domain domain, MembershipOracle* side = nullptr) const;

  /// Incremented on every successful extension.
  std::uint64_t version() const { return version_; }
  /// Number of cells filled so far (one oracle call each).
  std::uint64_t cells_filled() const { return cells_filled_; }

  /// Tab-separated dump: header "U" then V, one line per u with +/- cells.
  std::string dump_tsv() const;

 private:
  void invalidate();

  MembershipOracle* oracle_;
  std::vector<Word> prefixes_;
  std::vector<Word> suffixes_;
  std::unordered_map<Word, std::size_t, WordHash> prefix_ids_;
  std::unordered_map<Word, std::size_t, WordHash> suffix_ids_;
  std::vector<Row> rows_;
  std::uint64_t version_ = 0;
  std::uint64_t cells_filled_ = 0;

  mutable std::optional<std::vector<Row>> distinct_cache_;
  mutable std::optional<std::vector<Row>> prime_cache_;
};

}  // namespace rsfa
