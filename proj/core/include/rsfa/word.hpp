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
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace rsfa {

/// Alphabet character. Wide enough to hold every 32-bit integer plus one.
using Char = std::int64_t;

/// A string over the alphabet.
using Word = std::vector<Char>;

inline Word concat(std::span<const Char> a, std::span<const Char> b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

inline Word concat(std::span<const Char> a, Char c, std::span<const Char> b) {
  Word w;
  w.reserve(a.size() + 1 + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.push_back(c);
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

inline Word suffix(std::span<const Char> w, std::size_t from) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.end());
}

inline Word prefix(std::span<const Char> w, std::size_t len) {
  return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
}

/// Length-lexicographic order: shorter first, then lexicographic.
inline bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// "[1,2,3]"; the empty word prints as "[]".
std::string to_string(const Word& w);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Char c : w) {
      h ^= std::hash<Char>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace rsfa
