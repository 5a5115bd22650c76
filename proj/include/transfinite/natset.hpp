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

// Exact finite and co-finite subsets of the naturals.

#ifndef TRANSFINITE_NATSET_HPP_
#define TRANSFINITE_NATSET_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace transfinite {

using Nat = std::uint64_t;

struct FiniteCard {
  std::size_t n;
  friend bool operator==(const FiniteCard&, const FiniteCard&) = default;
};
struct CountablyInfinite {
  friend bool operator==(const CountablyInfinite&, const CountablyInfinite&) = default;
};
using CardClass = std::variant<FiniteCard, CountablyInfinite>;

std::string to_string(const CardClass& c);

// Either Finite(members) or CoFinite(excluded); both lists strictly
// ascending. CoFinite({}) is the whole of N. A finite shape never denotes an
// infinite set and vice versa, so structural equality is set equality.
class NatSet {
 public:
  // The empty set.
  NatSet() = default;

  static NatSet full();
  static NatSet empty_set();
  // Both sort their input and throw DomainError on duplicates.
  static NatSet finite(std::vector<Nat> members);
  static NatSet cofinite(std::vector<Nat> excluded);

  bool is_cofinite() const { return cofinite_; }
  // Members for a finite set, excluded naturals for a co-finite one.
  std::span<const Nat> listed() const { return listed_; }

  bool empty() const { return !cofinite_ && listed_.empty(); }
  bool contains(Nat n) const;
  CardClass card() const;

  // The least member. Throws DomainError when empty.
  Nat min() const;
  // The (index+1)-th smallest member, if there is one.
  std::optional<Nat> nth_smallest(std::size_t index) const;

  NatSet remove(Nat n) const;
  NatSet intersect(const NatSet& other) const;
  // this \ {listed}; `listed` must be sorted and duplicate-free.
  NatSet diff_finite(std::span<const Nat> listed) const;
  bool subset_of(const NatSet& other) const;

  // Not needed by the deduction process; kept for completeness of the algebra.
  NatSet unite(const NatSet& other) const;
  NatSet complement() const;

  friend bool operator==(const NatSet&, const NatSet&) = default;

 private:
  NatSet(bool cofinite, std::vector<Nat> listed)
      : cofinite_(cofinite), listed_(std::move(listed)) {}

  bool cofinite_ = false;
  std::vector<Nat> listed_;
};

// "{1,2,3}", "N\{0,1,2}", "N", "{}".
std::string to_string(const NatSet& s);

}  // namespace transfinite

#endif  // TRANSFINITE_NATSET_HPP_
