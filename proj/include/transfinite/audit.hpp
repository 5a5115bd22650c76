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

// Claim audit: evaluates each numbered claim about the deduction process
// against executed facts and records a verdict with its evidence.

#ifndef TRANSFINITE_AUDIT_HPP_
#define TRANSFINITE_AUDIT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "transfinite/engine.hpp"
#include "transfinite/natset.hpp"
#include "transfinite/ordinal.hpp"

namespace transfinite {

using Json = nlohmann::ordered_json;

enum class ClaimId {
  kEq3GreatestSet,
  kEq4MinIsIntersection,
  kEq5ChoiceIsMin,
  kEq6ClosedForm,
  kEq7DeductedIsMin,
  kEq8PastBelowFuture,
  kEq9MonotoneMin,
  kLemma1_1Nesting,
  kLemma1_2NonRepetition,
  kLemma1_3SingletonEnd,
  kDef4CannotByStep,
  kDef5CannotAll,
  kThm1GreatestExists,
  kEq10UnionN,
  kThm2SelfMember,
  kRegularity,
};

inline constexpr std::array<ClaimId, 16> kAllClaims = {
    ClaimId::kEq3GreatestSet,     ClaimId::kEq4MinIsIntersection,  ClaimId::kEq5ChoiceIsMin,
    ClaimId::kEq6ClosedForm,      ClaimId::kEq7DeductedIsMin,      ClaimId::kEq8PastBelowFuture,
    ClaimId::kEq9MonotoneMin,     ClaimId::kLemma1_1Nesting,       ClaimId::kLemma1_2NonRepetition,
    ClaimId::kLemma1_3SingletonEnd, ClaimId::kDef4CannotByStep,    ClaimId::kDef5CannotAll,
    ClaimId::kThm1GreatestExists, ClaimId::kEq10UnionN,            ClaimId::kThm2SelfMember,
    ClaimId::kRegularity,
};

// "Eq3_GreatestSet", "Lemma1_1_Nesting", ...
std::string_view claim_name(ClaimId id);
std::optional<ClaimId> claim_from_name(std::string_view name);

enum class Status { kVerified, kNotReproduced, kVacuous };
std::string_view status_name(Status status);
std::optional<Status> status_from_name(std::string_view name);

// NotReproduced verdicts always carry a witness; `witness` is null otherwise
// unless there is supporting evidence worth reporting.
struct Verdict {
  ClaimId claim;
  Status status;
  std::string checked_range;
  Json witness;
};

struct AuditConfig {
  Ordinal horizon;
  std::uint64_t seed = 42;
  Nat window = 1000;
  // Every finite stage up to this bound is checked exhaustively.
  Nat finite_stages = 1000;
  // Extra seeded finite stages drawn from (finite_stages, random_stage_max].
  std::size_t random_stages = 32;
  Nat random_stage_max = 10000;
  // Seeded stage pairs for the two-stage properties.
  std::size_t sampled_pairs = 4096;
  // Finite universes {0..k-1} for k = 1..finite_universes.
  std::size_t finite_universes = 200;
};

struct AuditReport {
  AuditConfig config;
  std::vector<Verdict> verdicts;

  std::size_t count(Status status) const;
  const Verdict& verdict(ClaimId id) const;
};

// Throws ConfigError when horizon < w+1 or window == 0.
AuditReport run_audit(const AuditConfig& config);
AuditReport run_audit(const Ordinal& horizon, std::uint64_t seed, Nat window);

// Stages examined by the stage-wise checks, ascending.
std::vector<Ordinal> audit_stage_grid(const AuditConfig& config);

Verdict check_lemma1_3(const Ordinal& horizon);
// The same claim for the process run on a finite universe.
Verdict check_lemma1_3(const NatSet& finite_universe);
Verdict check_thm1(const Ordinal& horizon);
Verdict check_thm1(const NatSet& finite_universe);
Verdict check_thm2(const Ordinal& horizon);
Verdict check_eq10(Nat window);

Json to_json(const Verdict& verdict);
Json to_json(const AuditReport& report);
std::string render_text(const AuditReport& report);

using VerdictProfile = std::map<ClaimId, Status>;

// A JSON object mapping claim names to status names.
VerdictProfile parse_profile(const Json& profile);
// Human-readable descriptions of every claim whose status differs from the
// profile (or is missing from either side). Empty when the report matches.
std::vector<std::string> profile_deviations(const AuditReport& report,
                                            const VerdictProfile& profile);

}  // namespace transfinite

#endif  // TRANSFINITE_AUDIT_HPP_
