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

// The transfinite deduction process over N.
//
// Stage alpha holds A (everything deducted at earlier stages), B = N \ A and
// the stage's outcome a: while B has at least two members the process picks
// x = f(B), y = f(B \ {x}) and deducts the smaller of the two; a singleton B
// yields sentinel b, an empty B sentinel c. At a limit stage A is the union
// of all earlier A's.
//
// Under the least-element choice every stage has a closed form
// (stage_closed_form). Any strategy can also be run literally for finitely
// many steps (simulate_steps); only the least-element choice admits
// evaluation at limit stages.

#ifndef TRANSFINITE_ENGINE_HPP_
#define TRANSFINITE_ENGINE_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "transfinite/natset.hpp"
#include "transfinite/ordinal.hpp"

namespace transfinite {

struct Deducted {
  Nat n;
  friend bool operator==(const Deducted&, const Deducted&) = default;
};
struct SentinelB {
  friend bool operator==(const SentinelB&, const SentinelB&) = default;
};
struct SentinelC {
  friend bool operator==(const SentinelC&, const SentinelC&) = default;
};
using StepOutcome = std::variant<Deducted, SentinelB, SentinelC>;

// "5", "b" or "c".
std::string to_string(const StepOutcome& outcome);

struct StageSnapshot {
  Ordinal alpha;
  NatSet a_naturals;
  bool a_has_b = false;
  bool a_has_c = false;
  NatSet b_set;
  StepOutcome outcome;

  friend bool operator==(const StageSnapshot&, const StageSnapshot&) = default;
};

struct MinChoice {};
// Picks the k-th smallest member (1-based), or the largest when the set has
// fewer than k members.
struct KthSmallest {
  std::size_t k = 1;
};
// Explicit choices per step: `first` = f(B), `second` = f(B \ {first}).
struct ScriptedChoice {
  Nat first;
  Nat second;
};
struct Scripted {
  std::map<Nat, ScriptedChoice> table;
};
using Strategy = std::variant<MinChoice, KthSmallest, Scripted>;

std::string to_string(const Strategy& strategy);
bool admits_limit_stages(const Strategy& strategy);

// Finite stages above this are not materialized by stage_closed_form.
inline constexpr Nat kClosedFormStageLimit = Nat{1} << 22;

// The least-element process on N at any stage below epsilon_0.
// Throws ResourceError for finite stages above kClosedFormStageLimit.
StageSnapshot stage_closed_form(const Ordinal& alpha);

// Literal iteration from stage 0 over `universe`, producing at most
// `max_steps` snapshots and stopping after the first end-condition snapshot.
// Throws StrategyError when a choice is not a member of the set it chose from.
std::vector<StageSnapshot> simulate_steps(const Strategy& strategy, const NatSet& universe,
                                          std::size_t max_steps);

// Streaming form of simulate_steps.
void for_each_step(const Strategy& strategy, const NatSet& universe, std::size_t max_steps,
                   const std::function<void(const StageSnapshot&)>& visit);

enum class EndKind { kSingleton, kEmpty };
std::string to_string(EndKind kind);

struct EndStage {
  Ordinal stage;
  EndKind kind;
  friend bool operator==(const EndStage&, const EndStage&) = default;
};

// B_{alpha+1} is non-empty.
bool cannot_deduct_by(const Ordinal& alpha);
// Every alpha < beta has B_{alpha+1} non-empty; holds exactly when beta <= w.
bool cannot_deduct_all_upto(const Ordinal& beta);

// Least stage <= horizon with Card(B) <= 1 under the least-element process on N.
std::optional<EndStage> first_end_stage(const Ordinal& horizon);
// Same, by literal simulation over `universe` for at most `max_steps` stages.
std::optional<EndStage> first_end_stage(const Strategy& strategy, const NatSet& universe,
                                        std::size_t max_steps);

}  // namespace transfinite

#endif  // TRANSFINITE_ENGINE_HPP_
