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

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsfa/word.hpp"

namespace rsfa {

/// Closed integer range [min, max] serving as the alphabet.
struct Domain {
  Char min = 0;
  Char max = 0;

  /// The full range of 32-bit signed integers.
  static Domain int32();

  bool contains(Char c) const { return min <= c && c <= max; }
  /// Number of characters; saturates at UINT64_MAX.
  std::uint64_t size() const;

  friend bool operator==(const Domain&, const Domain&) = default;
};

struct Interval {
  Char lo = 0;
  Char hi = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// A finite union of closed intervals over a Domain, kept in normal form:
/// sorted, non-overlapping and non-touching. Two predicates denote the same
/// set iff they compare equal.
class Predicate {
 public:
  /// ⊥ over the default domain [0, 0]. Mostly useful as a placeholder.
  Predicate() = default;

  /// Normalizes arbitrary intervals. Throws DomainError when some lo > hi or
  /// an endpoint falls outside `domain`.
  static Predicate normalize(std::span<const Interval> raw, Domain domain);
  static Predicate bottom(Domain domain);
  static Predicate top(Domain domain);
  /// The single interval [lo, hi]; throws like normalize.
  static Predicate range(Domain domain, Char lo, Char hi);
  static Predicate singleton(Domain domain, Char c) { return range(domain, c, c); }

  const Domain& domain() const { return domain_; }
  const std::vector<Interval>& intervals() const { return intervals_; }

  bool is_empty() const { return intervals_.empty(); }
  bool is_top() const;
  /// Smallest element, or nullopt for ⊥.
  std::optional<Char> witness() const;
  /// Throws DomainError when `c` lies outside the domain.
  bool contains(Char c) const;
  bool is_subset_of(const Predicate& other) const;
  /// Number of characters in the denotation (saturating).
  std::uint64_t cardinality() const;
  /// |{a | a ∈ S ⇔ a − 1 ∉ S}| with a − 1 ∉ S for a = domain.min.
  std::size_t border_count() const;

  Predicate operator&(const Predicate& other) const;
  Predicate operator|(const Predicate& other) const;
  Predicate operator~() const;
  /// this ∧ ¬other
  Predicate operator-(const Predicate& other) const;

  Predicate& operator&=(const Predicate& other) { return *this = *this & other; }
  Predicate& operator|=(const Predicate& other) { return *this = *this | other; }

  friend bool operator==(const Predicate&, const Predicate&) = default;
  /// Structural order; only meaningful for predicates over one domain.
  friend bool operator<(const Predicate& a, const Predicate& b) {
    return a.intervals_ < b.intervals_;
  }

  /// "[[0,5],[7,9]]"
  std::string to_string() const;

 private:
  Predicate(Domain domain, std::vector<Interval> normalized)
      : domain_(domain), intervals_(std::move(normalized)) {}
  void require_same_domain(const Predicate& other) const;

  Domain domain_{};
  std::vector<Interval> intervals_;
};

enum class BoolOp { And, Or, Not };

/// Applies `op` to `a` (and `b` for And/Or). Throws DomainError on domain
/// mismatch and PreconditionError when `b` is missing for a binary op.
Predicate combine(BoolOp op, const Predicate& a, const Predicate* b = nullptr);

/// The operations a character algebra must provide for symbolic automata:
/// Boolean connectives, membership, decidable emptiness and witnesses.
template <class A>
concept EffectiveBooleanAlgebra =
    requires(const A& alg, const typename A::predicate_type& p,
             const typename A::predicate_type& q, typename A::char_type c) {
      { alg.bottom() } -> std::same_as<typename A::predicate_type>;
      { alg.top() } -> std::same_as<typename A::predicate_type>;
      { alg.conj(p, q) } -> std::same_as<typename A::predicate_type>;
      { alg.disj(p, q) } -> std::same_as<typename A::predicate_type>;
      { alg.negate(p) } -> std::same_as<typename A::predicate_type>;
      { alg.member(p, c) } -> std::same_as<bool>;
      { alg.is_empty(p) } -> std::same_as<bool>;
      { alg.witness(p) } -> std::same_as<std::optional<typename A::char_type>>;
    };

/// Inequality algebra: predicates built from atoms X ≤ k. Over a small
/// domain such as [0, 5] every subset is a union of intervals, so the same
/// type doubles as a finite-set algebra.
class IntervalAlgebra {
 public:
  using predicate_type = Predicate;
  using char_type = Char;

  explicit IntervalAlgebra(Domain domain) : domain_(domain) {}

  const Domain& domain() const { return domain_; }

  Predicate bottom() const { return Predicate::bottom(domain_); }
  Predicate top() const { return Predicate::top(domain_); }
  /// ⟦X ≤ k⟧
  Predicate at_most(Char k) const;
  Predicate conj(const Predicate& p, const Predicate& q) const { return p & q; }
  Predicate disj(const Predicate& p, const Predicate& q) const { return p | q; }
  Predicate negate(const Predicate& p) const { return ~p; }
  bool member(const Predicate& p, Char c) const { return p.contains(c); }
  bool is_empty(const Predicate& p) const { return p.is_empty(); }
  std::optional<Char> witness(const Predicate& p) const { return p.witness(); }

 private:
  Domain domain_;
};

static_assert(EffectiveBooleanAlgebra<IntervalAlgebra>);

}  // namespace rsfa
