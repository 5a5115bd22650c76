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

#include "transfinite/natset.hpp"

#include <algorithm>
#include <iterator>

#include "transfinite/errors.hpp"

namespace transfinite {

namespace {

std::vector<Nat> normalized(std::vector<Nat> list) {
  if (!std::is_sorted(list.begin(), list.end())) std::sort(list.begin(), list.end());
  if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
    throw DomainError("NatSet list contains duplicates");
  }
  return list;
}

std::vector<Nat> set_union(std::span<const Nat> a, std::span<const Nat> b) {
  std::vector<Nat> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Nat> set_difference(std::span<const Nat> a, std::span<const Nat> b) {
  std::vector<Nat> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Nat> set_intersection(std::span<const Nat> a, std::span<const Nat> b) {
  std::vector<Nat> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(std::span<const Nat> a, std::span<const Nat> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

}  // namespace

std::string to_string(const CardClass& c) {
  if (const auto* f = std::get_if<FiniteCard>(&c)) return std::to_string(f->n);
  return "aleph0";
}

NatSet NatSet::full() { return NatSet(true, {}); }

NatSet NatSet::empty_set() { return NatSet(false, {}); }

NatSet NatSet::finite(std::vector<Nat> members) {
  return NatSet(false, normalized(std::move(members)));
}

NatSet NatSet::cofinite(std::vector<Nat> excluded) {
  return NatSet(true, normalized(std::move(excluded)));
}

bool NatSet::contains(Nat n) const {
  return std::binary_search(listed_.begin(), listed_.end(), n) != cofinite_;
}

CardClass NatSet::card() const {
  if (cofinite_) return CountablyInfinite{};
  return FiniteCard{listed_.size()};
}

Nat NatSet::min() const {
  if (empty()) throw DomainError("min of the empty set");
  if (!cofinite_) return listed_.front();
  Nat candidate = 0;
  for (Nat e : listed_) {
    if (e != candidate) break;
    ++candidate;
  }
  return candidate;
}

std::optional<Nat> NatSet::nth_smallest(std::size_t index) const {
  if (!cofinite_) {
    if (index >= listed_.size()) return std::nullopt;
    return listed_[index];
  }
  Nat candidate = index;
  for (Nat e : listed_) {
    if (e > candidate) break;
    ++candidate;
  }
  return candidate;
}

NatSet NatSet::remove(Nat n) const {
  std::vector<Nat> listed = listed_;
  auto it = std::lower_bound(listed.begin(), listed.end(), n);
  const bool present = it != listed.end() && *it == n;
  if (cofinite_) {
    if (!present) listed.insert(it, n);
  } else if (present) {
    listed.erase(it);
  }
  return NatSet(cofinite_, std::move(listed));
}

NatSet NatSet::intersect(const NatSet& other) const {
  if (!cofinite_ && !other.cofinite_) return NatSet(false, set_intersection(listed_, other.listed_));
  if (!cofinite_) return NatSet(false, set_difference(listed_, other.listed_));
  if (!other.cofinite_) return NatSet(false, set_difference(other.listed_, listed_));
  return NatSet(true, set_union(listed_, other.listed_));
}

NatSet NatSet::diff_finite(std::span<const Nat> listed) const {
  if (cofinite_) return NatSet(true, set_union(listed_, listed));
  return NatSet(false, set_difference(listed_, listed));
}

bool NatSet::subset_of(const NatSet& other) const {
  if (!cofinite_ && !other.cofinite_) {
    return std::includes(other.listed_.begin(), other.listed_.end(), listed_.begin(),
                         listed_.end());
  }
  if (!cofinite_) return disjoint(listed_, other.listed_);
  if (!other.cofinite_) return false;
  // Co-finite containment reverses on the excluded lists.
  return std::includes(listed_.begin(), listed_.end(), other.listed_.begin(),
                       other.listed_.end());
}

NatSet NatSet::unite(const NatSet& other) const {
  if (!cofinite_ && !other.cofinite_) return NatSet(false, set_union(listed_, other.listed_));
  if (!cofinite_) return NatSet(true, set_difference(other.listed_, listed_));
  if (!other.cofinite_) return NatSet(true, set_difference(listed_, other.listed_));
  return NatSet(true, set_intersection(listed_, other.listed_));
}

NatSet NatSet::complement() const { return NatSet(!cofinite_, listed_); }

std::string to_string(const NatSet& s) {
  std::string out;
  const auto listed = s.listed();
  if (s.is_cofinite()) {
    out = "N";
    if (listed.empty()) return out;
    out += "\\";
  }
  out += '{';
  for (std::size_t i = 0; i < listed.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(listed[i]);
  }
  out += '}';
  return out;
}

}  // namespace transfinite
