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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rsfa {

/// Append-only transcript of a learning run. Each line is
/// "<seq>\t<kind>\t<payload>" with kinds MQ, EQ, CE, EXTEND_U, EXTEND_V,
/// REPAIR and VIOLATION.
class EventLog {
 public:
  void record(std::string_view kind, std::string_view payload);
  const std::vector<std::string>& lines() const { return lines_; }
  std::size_t count(std::string_view kind) const;
  void write(std::ostream& os) const;

 private:
  std::vector<std::string> lines_;
};

}  // namespace rsfa
