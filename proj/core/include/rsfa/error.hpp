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

#include <stdexcept>
#include <string>

namespace rsfa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Predicate endpoints or characters outside the owning domain, or operands
/// over different domains.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON/CSV input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Subset construction exceeded the configured number of states.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A predicate-learner session was driven out of protocol order, or given a
/// counterexample that its hypothesis already agrees with.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

/// An iteration/progress guard of a learner tripped. Always a bug or a
/// violated precondition, never a normal outcome.
class GuardTripped : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace rsfa
