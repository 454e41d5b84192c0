// Copyright 2026 The repwords Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REPWORDS_ERRORS_HPP_
#define REPWORDS_ERRORS_HPP_

#include <stdexcept>

namespace repwords {

// Raised when an argument lies outside an operation's domain: a letter out
// of range, a non-prolongable seed, a word that violates a precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised by the textual word reader.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The operation exists but does not handle this kind of input
// (for instance, alignment arguments on a non-uniform morphism).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace repwords

#endif  // REPWORDS_ERRORS_HPP_
