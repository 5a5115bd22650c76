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

// Hereditarily finite sets.
//
// HFSet values are immutable and hash-consed: structurally equal sets share
// one node, so equality is a pointer comparison and von Neumann numerals
// share their entire substructure (vn(n) costs O(n) new storage given vn(n-1)).
// Elements are kept in a canonical total order: by cardinality, then
// lexicographically on the (already ordered) element lists.

#ifndef TRANSFINITE_HFSET_HPP_
#define TRANSFINITE_HFSET_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace transfinite {

class HFSet {
 public:
  // The empty set.
  HFSet();

  // The set whose members are exactly `elements`; repeats collapse.
  static HFSet of(std::vector<HFSet> elements);

  std::span<const HFSet> elements() const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  friend bool operator==(const HFSet& a, const HFSet& b) { return a.node_ == b.node_; }
  friend std::strong_ordering operator<=>(const HFSet& a, const HFSet& b);

  struct Node;

 private:
  explicit HFSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static HFSet intern(std::vector<HFSet> sorted_unique);

  std::shared_ptr<const Node> node_;
};

inline constexpr std::uint64_t kDefaultNumeralLimit = 16;

HFSet hf_empty();
// x ∪ {x}; any set, not only numerals.
HFSet hf_succ(const HFSet& x);
// x ∈ y.
bool hf_mem(const HFSet& x, const HFSet& y);
// The union of the members of x.
HFSet hf_union_all(const HFSet& x);
HFSet hf_intersect(const HFSet& x, const HFSet& y);
bool hf_subset(const HFSet& x, const HFSet& y);
// Well-foundedness makes this true for every HFSet; kept as an explicit check.
bool check_regular(const HFSet& x);

// The von Neumann numeral for n. Throws ResourceError when n > limit.
HFSet vn_encode(std::uint64_t n, std::uint64_t limit = kDefaultNumeralLimit);
// vn(0), ..., vn(n), built as one successor chain.
std::vector<HFSet> vn_table(std::uint64_t n, std::uint64_t limit = kDefaultNumeralLimit);
// n when x = vn(n); nullopt otherwise.
std::optional<std::uint64_t> vn_decode(const HFSet& x);

// y ∈ x or y = x. Throws DomainError when either argument is not a numeral.
bool vn_ge(const HFSet& x, const HFSet& y);

// The member x of `universe` with x >= y (under vn_ge) for every member y,
// or nullopt for an empty universe. Throws DomainError on duplicates and
// ResourceError when a member exceeds `limit`.
std::optional<std::uint64_t> has_greatest(std::span<const std::uint64_t> universe,
                                          std::uint64_t limit = 1024);

// {2} and {2, 3}: end-of-process markers that are not numerals.
HFSet sentinel_b();
HFSet sentinel_c();

// Nested-brace text, e.g. "{{},{{}}}".
std::string to_string(const HFSet& x);

}  // namespace transfinite

#endif  // TRANSFINITE_HFSET_HPP_
