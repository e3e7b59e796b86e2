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

#include <string>
#include <string_view>

#include "rsfa/sfa.hpp"

namespace rsfa {

// JSON encodings:
//   Domain    {"min": lo, "max": hi}
//   Predicate [[lo, hi], ...]
//   Sfa       {"domain": Domain, "states": N, "initial": [...], "final": [...],
//              "edges": [{"from": i, "to": j, "intervals": Predicate}, ...]}
// Edges are written sorted by (from, to); ⊥ edges are omitted. All parse
// functions throw ParseError on malformed input and DomainError on values the
// domain rejects.

std::string domain_to_json(const Domain& d);
Domain domain_from_json(std::string_view text);

std::string predicate_to_json(const Predicate& p);
Predicate predicate_from_json(std::string_view text, Domain domain);

std::string sfa_to_json(const Sfa& m, int indent = -1);
Sfa sfa_from_json(std::string_view text);

Sfa load_sfa(const std::string& path);
void save_sfa(const Sfa& m, const std::string& path);

}  // namespace rsfa
