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

#include "transfinite/engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "transfinite/errors.hpp"
#include "transfinite/hfset.hpp"

namespace transfinite {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::size_t card_size(const CardClass& c) {
  if (const auto* f = std::get_if<FiniteCard>(&c)) return f->n;
  return static_cast<std::size_t>(-1);
}

Nat choose(const Strategy& strategy, Nat step, const NatSet& from, bool second) {
  return std::visit(
      Overloaded{
          [&](const MinChoice&) { return from.min(); },
          [&](const KthSmallest& s) {
            const std::size_t k = std::min(std::max<std::size_t>(s.k, 1), card_size(from.card()));
            return *from.nth_smallest(k - 1);
          },
          [&](const Scripted& s) {
            auto it = s.table.find(step);
            if (it == s.table.end()) {
              throw StrategyError("no scripted choice for step " + std::to_string(step));
            }
            const Nat chosen = second ? it->second.second : it->second.first;
            if (!from.contains(chosen)) {
              throw StrategyError("scripted choice " + std::to_string(chosen) + " at step " +
                                  std::to_string(step) + " is not a member of " +
                                  to_string(from));
            }
            return chosen;
          },
      },
      strategy);
}

// Min(x, y) as the intersection of numerals, checked against numeric min
// whenever both numerals are within the default encoding limit.
Nat pair_min(Nat x, Nat y) {
  const Nat numeric = std::min(x, y);
  if (x <= kDefaultNumeralLimit && y <= kDefaultNumeralLimit) {
    const auto via_sets = vn_decode(hf_intersect(vn_encode(x), vn_encode(y)));
    if (via_sets != numeric) {
      throw std::logic_error("numeral intersection disagrees with numeric min");
    }
  }
  return numeric;
}

}  // namespace

std::string to_string(const StepOutcome& outcome) {
  return std::visit(Overloaded{
                        [](const Deducted& d) { return std::to_string(d.n); },
                        [](const SentinelB&) { return std::string("b"); },
                        [](const SentinelC&) { return std::string("c"); },
                    },
                    outcome);
}

std::string to_string(const Strategy& strategy) {
  return std::visit(Overloaded{
                        [](const MinChoice&) { return std::string("min"); },
                        [](const KthSmallest& s) { return "kth:" + std::to_string(s.k); },
                        [](const Scripted&) { return std::string("scripted"); },
                    },
                    strategy);
}

bool admits_limit_stages(const Strategy& strategy) {
  return std::holds_alternative<MinChoice>(strategy);
}

std::string to_string(EndKind kind) { return kind == EndKind::kEmpty ? "Empty" : "Singleton"; }

StageSnapshot stage_closed_form(const Ordinal& alpha) {
  StageSnapshot snap;
  snap.alpha = alpha;
  if (auto n = alpha.finite_value()) {
    if (*n > kClosedFormStageLimit) {
      throw ResourceError("finite stage " + to_string(alpha) + " exceeds the closed-form limit");
    }
    std::vector<Nat> below(n->convert_to<Nat>());
    std::iota(below.begin(), below.end(), Nat{0});
    snap.a_naturals = NatSet::finite(below);
    snap.b_set = NatSet::cofinite(std::move(below));
    snap.outcome = Deducted{n->convert_to<Nat>()};
    return snap;
  }
  // Every finite stage n deducts n, so the union at w already exhausts N and
  // every later stage sees an empty B.
  snap.a_naturals = NatSet::full();
  snap.b_set = NatSet::empty_set();
  snap.a_has_c = alpha > Ordinal::omega();
  snap.outcome = SentinelC{};
  return snap;
}

void for_each_step(const Strategy& strategy, const NatSet& universe, std::size_t max_steps,
                   const std::function<void(const StageSnapshot&)>& visit) {
  std::vector<Nat> deducted;
  for (std::size_t step = 0; step < max_steps; ++step) {
    StageSnapshot snap;
    snap.alpha = Ordinal::from_natural(step);
    snap.a_naturals = NatSet::finite(deducted);
    snap.b_set = universe.diff_finite(deducted);
    const std::size_t size = card_size(snap.b_set.card());
    if (size > 1) {
      const Nat x = choose(strategy, step, snap.b_set, false);
      const Nat y = choose(strategy, step, snap.b_set.remove(x), true);
      const Nat a = pair_min(x, y);
      snap.outcome = Deducted{a};
      visit(snap);
      deducted.insert(std::lower_bound(deducted.begin(), deducted.end(), a), a);
      continue;
    }
    if (size == 1) {
      snap.outcome = SentinelB{};
    } else {
      snap.outcome = SentinelC{};
    }
    visit(snap);
    return;
  }
}

std::vector<StageSnapshot> simulate_steps(const Strategy& strategy, const NatSet& universe,
                                          std::size_t max_steps) {
  std::vector<StageSnapshot> out;
  for_each_step(strategy, universe, max_steps,
                [&](const StageSnapshot& snap) { out.push_back(snap); });
  return out;
}

bool cannot_deduct_by(const Ordinal& alpha) {
  return stage_closed_form(alpha.successor()).b_set.card() != CardClass{FiniteCard{0}};
}

bool cannot_deduct_all_upto(const Ordinal& beta) { return beta <= Ordinal::omega(); }

std::optional<EndStage> first_end_stage(const Ordinal& horizon) {
  // Finite stages have co-finite B, so the first candidate is w.
  const Ordinal omega = Ordinal::omega();
  if (horizon < omega) return std::nullopt;
  const std::size_t size = card_size(stage_closed_form(omega).b_set.card());
  if (size > 1) return std::nullopt;
  return EndStage{omega, size == 1 ? EndKind::kSingleton : EndKind::kEmpty};
}

std::optional<EndStage> first_end_stage(const Strategy& strategy, const NatSet& universe,
                                        std::size_t max_steps) {
  std::optional<EndStage> found;
  for_each_step(strategy, universe, max_steps, [&](const StageSnapshot& snap) {
    if (std::holds_alternative<SentinelB>(snap.outcome)) {
      found = EndStage{snap.alpha, EndKind::kSingleton};
    } else if (std::holds_alternative<SentinelC>(snap.outcome)) {
      found = EndStage{snap.alpha, EndKind::kEmpty};
    }
  });
  return found;
}

}  // namespace transfinite
