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

#include "rsfa/gen.hpp"

#include <utility>

#include "rsfa/error.hpp"

namespace rsfa {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Sfa random_sfa(const GenParams& p) {
  if (p.n_q == 0) throw PreconditionError("n_q must be at least 1");
  if (!(p.p_i >= 0.0 && p.p_i <= 1.0) || !(p.p_f >= 0.0 && p.p_f <= 1.0)) {
    throw PreconditionError("probabilities must lie in [0, 1]");
  }
  SplitMix64 rng(p.seed);
  Sfa m(p.domain, p.n_q);
  for (State q = 0; q < p.n_q; ++q) {
    if (rng.unit() < p.p_i) m.set_initial(q);
    if (rng.unit() < p.p_f) m.set_final(q);
    for (std::size_t k = 0; k < p.n_delta; ++k) {
      const State to = static_cast<State>(rng.uniform(0, static_cast<std::int64_t>(p.n_q) - 1));
      Char l = rng.uniform(p.domain.min, p.domain.max);
      Char r = rng.uniform(p.domain.min, p.domain.max);
      if (r < l) std::swap(l, r);
      m.add_to_edge(q, to, Predicate::range(p.domain, l, r));
    }
  }
  return m;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 rng(base ^ (index * 0xd1342543de82ef95ULL));
  rng.next();
  return rng.next();
}

}  // namespace rsfa
