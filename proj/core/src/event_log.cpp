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

#include "rsfa/event_log.hpp"

#include <ostream>

namespace rsfa {

void EventLog::record(std::string_view kind, std::string_view payload) {
  std::string line = std::to_string(lines_.size());
  line += '\t';
  line += kind;
  line += '\t';
  line += payload;
  lines_.push_back(std::move(line));
}

std::size_t EventLog::count(std::string_view kind) const {
  std::size_t n = 0;
  for (const auto& line : lines_) {
    const auto first = line.find('\t');
    const auto second = line.find('\t', first + 1);
    if (std::string_view(line).substr(first + 1, second - first - 1) == kind) ++n;
  }
  return n;
}

void EventLog::write(std::ostream& os) const {
  for (const auto& line : lines_) os << line << '\n';
}

}  // namespace rsfa
