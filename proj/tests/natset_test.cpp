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

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "transfinite/errors.hpp"

namespace transfinite {
namespace {

using testing::random_natset;
using testing::WindowSet;

TEST(NatSet, Constructors) {
  EXPECT_TRUE(NatSet::full().is_cofinite());
  EXPECT_TRUE(NatSet::full().listed().empty());
  EXPECT_EQ(to_string(NatSet::full()), "N");
  EXPECT_EQ(NatSet::finite({2, 1}), NatSet::finite({1, 2}));
  EXPECT_EQ(to_string(NatSet::finite({2, 1})), "{1,2}");
  EXPECT_THROW(NatSet::finite({1, 1}), DomainError);
  EXPECT_THROW(NatSet::cofinite({4, 0, 4}), DomainError);
  EXPECT_EQ(to_string(NatSet::cofinite({0, 1})), "N\\{0,1}");
  EXPECT_EQ(to_string(NatSet::empty_set()), "{}");
}

TEST(NatSet, Min) {
  EXPECT_EQ(NatSet::full().min(), 0u);
  EXPECT_EQ(NatSet::cofinite({0, 1, 2}).min(), 3u);
  EXPECT_EQ(NatSet::cofinite({1, 2}).min(), 0u);
  EXPECT_EQ(NatSet::finite({5, 9}).min(), 5u);
  EXPECT_THROW(NatSet::empty_set().min(), DomainError);
}

TEST(NatSet, Remove) {
  EXPECT_EQ(NatSet::full().remove(0), NatSet::cofinite({0}));
  EXPECT_EQ(NatSet::finite({1, 2}).remove(2), NatSet::finite({1}));
  EXPECT_EQ(NatSet::cofinite({0}).remove(0), NatSet::cofinite({0}));
  EXPECT_EQ(NatSet::finite({1}).remove(7), NatSet::finite({1}));
}

TEST(NatSet, Card) {
  EXPECT_EQ(NatSet::full().card(), CardClass(CountablyInfinite{}));
  EXPECT_EQ(NatSet::finite({4}).card(), CardClass(FiniteCard{1}));
  std::vector<Nat> thousand;
  for (Nat i = 0; i < 1000; ++i) thousand.push_back(i);
  const NatSet s = NatSet::cofinite(thousand);
  EXPECT_EQ(s.card(), CardClass(CountablyInfinite{}));
  EXPECT_TRUE(s.contains(1000));
  EXPECT_EQ(to_string(NatSet::empty_set().card()), "0");
  EXPECT_EQ(to_string(s.card()), "aleph0");
}

TEST(NatSet, RelationsAcrossShapes) {
  EXPECT_TRUE(NatSet::cofinite({0, 1}).subset_of(NatSet::cofinite({0})));
  EXPECT_FALSE(NatSet::cofinite({0}).subset_of(NatSet::cofinite({0, 1})));
  EXPECT_EQ(NatSet::cofinite({0}).intersect(NatSet::cofinite({1})), NatSet::cofinite({0, 1}));
  EXPECT_EQ(NatSet::finite({}), NatSet::empty_set());
  EXPECT_TRUE(NatSet::finite({2, 3}).subset_of(NatSet::cofinite({0})));
  EXPECT_FALSE(NatSet::finite({0, 3}).subset_of(NatSet::cofinite({0})));
  EXPECT_FALSE(NatSet::cofinite({}).subset_of(NatSet::finite({0, 1, 2})));
  EXPECT_EQ(NatSet::finite({1, 2, 5}).intersect(NatSet::cofinite({2})), NatSet::finite({1, 5}));
  EXPECT_EQ(NatSet::full().diff_finite(std::vector<Nat>{0, 1, 2}), NatSet::cofinite({0, 1, 2}));
  EXPECT_EQ(NatSet::finite({0, 1, 2}).diff_finite(std::vector<Nat>{1}), NatSet::finite({0, 2}));
  EXPECT_NE(NatSet::finite({}), NatSet::cofinite({}));
}

TEST(NatSet, NthSmallest) {
  EXPECT_EQ(NatSet::cofinite({1, 3}).nth_smallest(0), 0u);
  EXPECT_EQ(NatSet::cofinite({1, 3}).nth_smallest(1), 2u);
  EXPECT_EQ(NatSet::cofinite({1, 3}).nth_smallest(2), 4u);
  EXPECT_EQ(NatSet::finite({4, 8}).nth_smallest(1), 8u);
  EXPECT_EQ(NatSet::finite({4, 8}).nth_smallest(2), std::nullopt);
}

TEST(NatSet, UnionAndComplementHelpers) {
  EXPECT_EQ(NatSet::cofinite({1, 2}).unite(NatSet::cofinite({2, 3})), NatSet::cofinite({2}));
  EXPECT_EQ(NatSet::finite({1}).unite(NatSet::cofinite({1, 4})), NatSet::cofinite({4}));
  EXPECT_EQ(NatSet::finite({3}).complement(), NatSet::cofinite({3}));
}

// Every operation, on random operands, against the bit-vector model.
TEST(NatSet, AgreesWithBitVectorOracle) {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 2000; ++round) {
    const NatSet a = random_natset(rng);
    const NatSet b = random_natset(rng);
    const WindowSet wa = WindowSet::from(a);
    const WindowSet wb = WindowSet::from(b);
    const Nat probe = rng() % (WindowSet::kWindow + 8);

    ASSERT_EQ(a.contains(probe), wa.contains(probe));
    ASSERT_EQ(a.empty(), wa.empty());
    if (!wa.empty()) ASSERT_EQ(a.min(), *wa.min());
    const auto card = a.card();
    if (auto n = wa.count()) {
      ASSERT_EQ(card, CardClass(FiniteCard{*n}));
    } else {
      ASSERT_EQ(card, CardClass(CountablyInfinite{}));
    }
    ASSERT_EQ(a.subset_of(b), wa.subset_of(wb));
    ASSERT_EQ(a == b, wa == wb);
    ASSERT_EQ(WindowSet::from(a.intersect(b)), wa.intersect(wb));
    const Nat r = rng() % WindowSet::kWindow;
    ASSERT_EQ(WindowSet::from(a.remove(r)), wa.remove(r));
    ASSERT_EQ(WindowSet::from(a.unite(b)), wa.unite(wb));
    ASSERT_EQ(WindowSet::from(a.complement()), wa.complement());
    const std::size_t index = rng() % 40;
    ASSERT_EQ(a.nth_smallest(index), wa.nth_smallest(index));
    if (!b.is_cofinite()) {
      ASSERT_EQ(WindowSet::from(a.diff_finite(b.listed())), wa.minus(wb));
    }
  }
}

TEST(NatSet, MinIsLeastMember) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    const NatSet s = random_natset(rng, 64);
    if (s.empty()) continue;
    const Nat m = s.min();
    EXPECT_TRUE(s.contains(m));
    for (Nat k = 0; k < m; ++k) EXPECT_FALSE(s.contains(k));
  }
}

TEST(NatSet, SubsetAntisymmetry) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 5000; ++i) {
    const NatSet a = random_natset(rng, 12);
    const NatSet b = random_natset(rng, 12);
    if (a.subset_of(b) && b.subset_of(a)) EXPECT_EQ(a, b);
  }
}

TEST(NatSet, RemoveThenMissing) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 2000; ++i) {
    const NatSet s = random_natset(rng, 40);
    const Nat n = rng() % 40;
    const NatSet r = s.remove(n);
    EXPECT_FALSE(r.contains(n));
    if (!s.is_cofinite()) {
      const auto before = std::get<FiniteCard>(s.card()).n;
      const auto after = std::get<FiniteCard>(r.card()).n;
      EXPECT_EQ(after, s.contains(n) ? before - 1 : before);
    } else {
      EXPECT_EQ(r.card(), CardClass(CountablyInfinite{}));
    }
  }
}

}  // namespace
}  // namespace transfinite
