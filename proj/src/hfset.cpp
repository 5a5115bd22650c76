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

#include "transfinite/hfset.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <mutex>
#include <unordered_map>

#include "transfinite/errors.hpp"

namespace transfinite {

struct HFSet::Node {
  std::vector<HFSet> elements;
  std::size_t hash = 0;
};

namespace {

// Members are interned, so each non-empty member owns a distinct element
// buffer whose address identifies it.
std::size_t hash_elements(const std::vector<HFSet>& elements) {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ elements.size();
  for (const HFSet& e : elements) {
    const std::size_t eh = std::hash<const void*>{}(e.elements().data()) ^ (e.size() << 1);
    h ^= eh + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

struct InternTable {
  std::mutex mu;
  std::unordered_multimap<std::size_t, std::weak_ptr<const HFSet::Node>> nodes;
};

InternTable& intern_table() {
  static InternTable table;
  return table;
}

// vn(0), vn(1), ... grown on demand and shared process-wide.
struct NumeralCache {
  std::mutex mu;
  std::vector<HFSet> numerals;
};

NumeralCache& numeral_cache() {
  static NumeralCache cache;
  return cache;
}

HFSet cached_numeral(std::uint64_t n) {
  NumeralCache& cache = numeral_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  if (cache.numerals.empty()) cache.numerals.push_back(HFSet());
  while (cache.numerals.size() <= n) cache.numerals.push_back(hf_succ(cache.numerals.back()));
  return cache.numerals[n];
}

bool same_elements(const std::vector<HFSet>& a, std::span<const HFSet> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

HFSet::HFSet() : HFSet(intern({})) {}

HFSet HFSet::intern(std::vector<HFSet> sorted_unique) {
  const std::size_t h = hash_elements(sorted_unique);
  std::shared_ptr<const Node> found;
  {
    InternTable& table = intern_table();
    std::lock_guard<std::mutex> lock(table.mu);
    auto [it, end] = table.nodes.equal_range(h);
    while (it != end) {
      std::shared_ptr<const Node> candidate = it->second.lock();
      if (!candidate) {
        it = table.nodes.erase(it);
        continue;
      }
      if (same_elements(sorted_unique, candidate->elements)) {
        found = std::move(candidate);
        break;
      }
      ++it;
    }
    if (!found) {
      auto node = std::make_shared<Node>();
      node->elements = std::move(sorted_unique);
      node->hash = h;
      found = node;
      table.nodes.emplace(h, found);
    }
  }
  return HFSet(std::move(found));
}

HFSet HFSet::of(std::vector<HFSet> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return intern(std::move(elements));
}

std::span<const HFSet> HFSet::elements() const { return node_->elements; }

std::size_t HFSet::size() const { return node_->elements.size(); }

std::strong_ordering operator<=>(const HFSet& a, const HFSet& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& xs = a.node_->elements;
  const auto& ys = b.node_->elements;
  if (xs.size() != ys.size()) return xs.size() <=> ys.size();
  // Interning makes equal elements pointer-equal, so only the first
  // differing pair is ever descended into.
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == ys[i]) continue;
    return xs[i] <=> ys[i];
  }
  return std::strong_ordering::equal;
}

HFSet hf_empty() { return HFSet(); }

HFSet hf_succ(const HFSet& x) {
  std::vector<HFSet> elements(x.elements().begin(), x.elements().end());
  elements.push_back(x);
  return HFSet::of(std::move(elements));
}

bool hf_mem(const HFSet& x, const HFSet& y) {
  const auto elements = y.elements();
  return std::binary_search(elements.begin(), elements.end(), x);
}

HFSet hf_union_all(const HFSet& x) {
  std::vector<HFSet> all;
  for (const HFSet& member : x.elements()) {
    all.insert(all.end(), member.elements().begin(), member.elements().end());
  }
  return HFSet::of(std::move(all));
}

HFSet hf_intersect(const HFSet& x, const HFSet& y) {
  std::vector<HFSet> common;
  std::set_intersection(x.elements().begin(), x.elements().end(), y.elements().begin(),
                        y.elements().end(), std::back_inserter(common));
  return HFSet::of(std::move(common));
}

bool hf_subset(const HFSet& x, const HFSet& y) {
  return std::includes(y.elements().begin(), y.elements().end(), x.elements().begin(),
                       x.elements().end());
}

bool check_regular(const HFSet& x) { return !hf_mem(x, x); }

HFSet vn_encode(std::uint64_t n, std::uint64_t limit) {
  if (n > limit) {
    throw ResourceError("numeral " + std::to_string(n) + " exceeds limit " +
                        std::to_string(limit));
  }
  return cached_numeral(n);
}

std::vector<HFSet> vn_table(std::uint64_t n, std::uint64_t limit) {
  if (n > limit) {
    throw ResourceError("numeral " + std::to_string(n) + " exceeds limit " +
                        std::to_string(limit));
  }
  std::vector<HFSet> table;
  table.reserve(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) table.push_back(cached_numeral(i));
  return table;
}

std::optional<std::uint64_t> vn_decode(const HFSet& x) {
  // Canonical order sorts by cardinality and vn(n) = {vn(0), ..., vn(n-1)}
  // has exactly one member of each cardinality below n.
  const auto elements = x.elements();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].size() != i) return std::nullopt;
  }
  const std::uint64_t n = elements.size();
  if (x != cached_numeral(n)) return std::nullopt;
  return n;
}

bool vn_ge(const HFSet& x, const HFSet& y) {
  if (!vn_decode(x) || !vn_decode(y)) throw DomainError("vn_ge expects numerals");
  return hf_mem(y, x) || y == x;
}

std::optional<std::uint64_t> has_greatest(std::span<const std::uint64_t> universe,
                                          std::uint64_t limit) {
  std::vector<std::uint64_t> sorted(universe.begin(), universe.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("has_greatest universe contains duplicates");
  }
  std::vector<HFSet> encoded;
  encoded.reserve(universe.size());
  for (std::uint64_t n : universe) encoded.push_back(vn_encode(n, limit));

  // S = { x in universe | for all y in universe, x >= y }.
  std::optional<std::uint64_t> found;
  for (std::size_t i = 0; i < encoded.size(); ++i) {
    const bool greatest = std::all_of(encoded.begin(), encoded.end(),
                                      [&](const HFSet& y) { return vn_ge(encoded[i], y); });
    if (greatest) {
      found = universe[i];
      break;
    }
  }
  return found;
}

HFSet sentinel_b() { return HFSet::of({vn_encode(2)}); }

HFSet sentinel_c() { return HFSet::of({vn_encode(2), vn_encode(3)}); }

std::string to_string(const HFSet& x) {
  std::string out = "{";
  bool first = true;
  for (const HFSet& e : x.elements()) {
    if (!first) out += ',';
    first = false;
    out += to_string(e);
  }
  out += '}';
  return out;
}

}  // namespace transfinite
