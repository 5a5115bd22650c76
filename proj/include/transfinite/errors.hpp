// Copyright 2026 The Transfinite Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRANSFINITE_ERRORS_HPP_
#define TRANSFINITE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transfinite {

// Argument outside an operation's domain (empty set passed to min, duplicate
// list entries, non-numeral passed to a numeral-only relation).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured size bound would be exceeded.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A choice strategy produced a value that is not a member of the set it was
// asked to choose from, or has no entry for a reached step.
class StrategyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid run configuration (audit horizon too small, empty universe, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace transfinite

#endif  // TRANSFINITE_ERRORS_HPP_
