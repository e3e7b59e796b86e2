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

#include <cstdint>

#include "rsfa/sfa.hpp"

namespace rsfa {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15, then
/// the 64-bit finalizer. Identical streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [lo, hi] by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, 1) with 53 bits of precision.
  double unit();

 private:
  std::uint64_t state_;
};

struct GenParams {
  std::size_t n_q = 8;
  std::size_t n_delta = 2;
  double p_i = 0.5;
  double p_f = 0.5;
  Domain domain = Domain::int32();
  std::uint64_t seed = 0;
};

/// Random nondeterministic SFA. For each state, in index order: draw
/// initial (p_i), draw final (p_f), then n_delta times pick a destination
/// uniformly and two uniform characters l ≤ r (drawn, then sorted), unioning
/// [l, r] into the edge predicate. Throws PreconditionError on invalid
/// parameters.
Sfa random_sfa(const GenParams& p);

/// Seed of trial `index` under a sweep seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace rsfa
