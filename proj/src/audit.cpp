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

#include "transfinite/audit.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "transfinite/errors.hpp"
#include "transfinite/hfset.hpp"

namespace transfinite {

namespace {

constexpr std::array<std::string_view, 16> kClaimNames = {
    "Eq3_GreatestSet",        "Eq4_MinIsIntersection", "Eq5_ChoiceIsMin",
    "Eq6_ClosedForm",         "Eq7_DeductedIsMin",     "Eq8_PastBelowFuture",
    "Eq9_MonotoneMin",        "Lemma1_1_Nesting",      "Lemma1_2_NonRepetition",
    "Lemma1_3_SingletonEnd",  "Def4_CannotByStep",     "Def5_CannotAll",
    "Thm1_GreatestExists",    "Eq10_UnionN",           "Thm2_SelfMember",
    "Regularity",
};

constexpr std::array<std::string_view, 3> kStatusNames = {"Verified", "NotReproduced",
                                                          "Vacuous"};

// Numerals are materialized up to the window, so it has to stay small.
constexpr Nat kMaxWindow = 4096;
constexpr std::uint64_t kHfTableMax = 12;

std::size_t card_size(const CardClass& c) {
  if (const auto* f = std::get_if<FiniteCard>(&c)) return f->n;
  return static_cast<std::size_t>(-1);
}

std::string card_text(const NatSet& s) { return to_string(s.card()); }

Json end_json(const EndStage& end) {
  Json j;
  j["stage"] = to_string(end.stage);
  j["end"] = to_string(end.kind);
  return j;
}

std::vector<Nat> iota_list(Nat n) {
  std::vector<Nat> out(n);
  for (Nat i = 0; i < n; ++i) out[i] = i;
  return out;
}

bool a_subset(const StageSnapshot& smaller, const StageSnapshot& larger) {
  return smaller.a_naturals.subset_of(larger.a_naturals) &&
         (!smaller.a_has_b || larger.a_has_b) && (!smaller.a_has_c || larger.a_has_c);
}

Verdict verdict(ClaimId id, Status status, std::string range, Json witness = nullptr) {
  return Verdict{id, status, std::move(range), std::move(witness)};
}

// Collected evidence for a stage-wise or pair-wise property.
struct Tally {
  std::size_t checked = 0;
  std::size_t vacuous = 0;
  Json counterexample = nullptr;

  void fail(Json witness) {
    if (counterexample.is_null()) counterexample = std::move(witness);
  }

  Verdict finish(ClaimId id, const std::string& range) const {
    std::string full = range + "; " + std::to_string(checked) + " checked";
    if (vacuous > 0) full += ", " + std::to_string(vacuous) + " vacuous";
    if (!counterexample.is_null()) return verdict(id, Status::kNotReproduced, full, counterexample);
    if (checked == 0) return verdict(id, Status::kVacuous, full);
    return verdict(id, Status::kVerified, full);
  }
};

class Auditor {
 public:
  explicit Auditor(const AuditConfig& config)
      : config_(config), rng_(config.seed ^ 0x9a125eedULL) {
    const std::vector<Ordinal> stages = audit_stage_grid(config);
    grid_.reserve(stages.size());
    for (const Ordinal& alpha : stages) grid_.push_back(stage_closed_form(alpha));
    build_pairs();

    std::ostringstream stages_text;
    stages_text << "finite stages 0.." << config.finite_stages;
    if (config.random_stages > 0 && config.random_stage_max > config.finite_stages) {
      stages_text << " + " << config.random_stages << " seeded stages in ("
                  << config.finite_stages << "," << config.random_stage_max << "]";
    }
    stages_text << " + limit stages";
    for (const StageSnapshot& s : grid_) {
      if (!s.alpha.is_finite()) stages_text << ' ' << to_string(s.alpha);
    }
    stage_range_ = stages_text.str();
    pair_range_ = std::to_string(pairs_.size()) + " stage pairs over " + stage_range_;
  }

  AuditReport run() {
    AuditReport report;
    report.config = config_;
    for (ClaimId id : kAllClaims) report.verdicts.push_back(check(id));
    return report;
  }

 private:
  Verdict check(ClaimId id) {
    switch (id) {
      case ClaimId::kEq3GreatestSet: return eq3();
      case ClaimId::kEq4MinIsIntersection: return eq4();
      case ClaimId::kEq5ChoiceIsMin: return eq5();
      case ClaimId::kEq6ClosedForm: return eq6();
      case ClaimId::kEq7DeductedIsMin: return eq7();
      case ClaimId::kEq8PastBelowFuture: return eq8();
      case ClaimId::kEq9MonotoneMin: return eq9();
      case ClaimId::kLemma1_1Nesting: return lemma1_1();
      case ClaimId::kLemma1_2NonRepetition: return lemma1_2();
      case ClaimId::kLemma1_3SingletonEnd: return with_finite_contrast(check_lemma1_3(config_.horizon), false);
      case ClaimId::kDef4CannotByStep: return def4();
      case ClaimId::kDef5CannotAll: return def5();
      case ClaimId::kThm1GreatestExists: return with_finite_contrast(check_thm1(config_.horizon), true);
      case ClaimId::kEq10UnionN: return check_eq10(config_.window);
      case ClaimId::kThm2SelfMember: return check_thm2(config_.horizon);
      case ClaimId::kRegularity: return regularity();
    }
    throw std::logic_error("unknown claim");
  }

  void build_pairs() {
    const std::size_t n = grid_.size();
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> limits;
    for (std::size_t i = 0; i < n; ++i) {
      if (!grid_[i].alpha.is_finite()) limits.push_back(i);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace(i, i + 1);
    for (std::size_t i = 0; i < std::min<std::size_t>(n, 50); ++i) {
      for (std::size_t j = i; j < std::min<std::size_t>(n, 50); ++j) pairs.emplace(i, j);
    }
    for (std::size_t j : limits) {
      for (std::size_t i = 0; i <= j; ++i) pairs.emplace(i, j);
    }
    for (std::size_t k = 0; k < config_.sampled_pairs && n > 0; ++k) {
      std::size_t i = rng_() % n;
      std::size_t j = rng_() % n;
      if (i > j) std::swap(i, j);
      pairs.emplace(i, j);
    }
    pairs_.assign(pairs.begin(), pairs.end());
  }

  Verdict eq3() {
    std::size_t agreeing = 0;
    Json disagreement = nullptr;
    for (std::size_t k = 1; k <= config_.finite_universes; ++k) {
      const auto universe = iota_list(k);
      if (has_greatest(universe) == std::optional<std::uint64_t>(k - 1)) {
        ++agreeing;
      } else if (disagreement.is_null()) {
        disagreement = Json{{"universe_size", k}};
      }
    }
    const std::string range = "bounded: no witness <= " + to_string(config_.horizon) +
                              " on N; finite universes {0..k-1}, k=1.." +
                              std::to_string(config_.finite_universes);
    if (!disagreement.is_null()) return verdict(ClaimId::kEq3GreatestSet, Status::kNotReproduced, range, disagreement);
    const auto end = first_end_stage(config_.horizon);
    Json witness;
    witness["greatest_on_N"] = nullptr;
    witness["first_end_on_N"] = end ? end_json(*end) : Json(nullptr);
    witness["finite_universes_with_greatest"] = agreeing;
    return verdict(ClaimId::kEq3GreatestSet, Status::kVacuous, range, witness);
  }

  Verdict eq4() {
    Tally tally;
    for (std::uint64_t i = 0; i <= kHfTableMax; ++i) {
      for (std::uint64_t j = 0; j <= kHfTableMax; ++j) {
        ++tally.checked;
        if (hf_intersect(vn_encode(i), vn_encode(j)) != vn_encode(std::min(i, j))) {
          tally.fail(Json{{"i", i}, {"j", j}});
        }
      }
    }
    // The engine cross-checks every pair choice within the numeral limit.
    const NatSet small = NatSet::finite(iota_list(kDefaultNumeralLimit + 1));
    for (std::size_t k = 1; k <= 3; ++k) {
      try {
        tally.checked += simulate_steps(KthSmallest{k}, small, small.listed().size()).size();
      } catch (const std::logic_error&) {
        tally.fail(Json{{"strategy", "kth:" + std::to_string(k)}});
      }
    }
    return tally.finish(ClaimId::kEq4MinIsIntersection,
                        "numeral pairs i,j <= 12 and simulated pair choices <= 16");
  }

  Verdict eq5() {
    Tally tally;
    for (const StageSnapshot& s : grid_) {
      if (s.b_set.empty()) {
        ++tally.vacuous;
        continue;
      }
      ++tally.checked;
      const Nat m = s.b_set.min();
      bool least = s.b_set.contains(m);
      for (Nat k = 0; k < std::min<Nat>(m, config_.window) && least; ++k) {
        least = !s.b_set.contains(k);
      }
      if (!least) tally.fail(Json{{"stage", to_string(s.alpha)}, {"min", m}});
    }
    // The intersection of a non-empty set of numerals is its least member.
    constexpr unsigned kBits = 8;
    for (unsigned mask = 1; mask < (1u << kBits); ++mask) {
      ++tally.checked;
      std::optional<HFSet> meet;
      std::uint64_t least = kBits;
      for (unsigned b = 0; b < kBits; ++b) {
        if (!(mask & (1u << b))) continue;
        least = std::min<std::uint64_t>(least, b);
        meet = meet ? hf_intersect(*meet, vn_encode(b)) : vn_encode(b);
      }
      if (vn_decode(*meet) != least) tally.fail(Json{{"subset_mask", mask}});
    }
    return tally.finish(ClaimId::kEq5ChoiceIsMin,
                        stage_range_ + "; all non-empty subsets of {0..7} as numerals");
  }

  Verdict eq6() {
    Tally tally;
    std::map<Nat, const StageSnapshot*> finite;
    Nat last = 0;
    for (const StageSnapshot& s : grid_) {
      if (auto n = s.alpha.finite_value()) {
        finite.emplace(n->convert_to<Nat>(), &s);
        last = std::max(last, n->convert_to<Nat>());
      }
    }
    for_each_step(MinChoice{}, NatSet::full(), last + 1, [&](const StageSnapshot& sim) {
      auto it = finite.find(sim.alpha.finite_value()->convert_to<Nat>());
      if (it == finite.end()) return;
      ++tally.checked;
      if (!(*it->second == sim)) tally.fail(Json{{"stage", to_string(sim.alpha)}});
    });
    for (const StageSnapshot& s : grid_) {
      if (s.alpha.is_finite()) continue;
      ++tally.checked;
      if (!outcome_matches_card(s)) tally.fail(Json{{"stage", to_string(s.alpha)}});
    }
    return tally.finish(ClaimId::kEq6ClosedForm,
                        stage_range_ + "; finite stages against literal simulation");
  }

  Verdict eq7() {
    Tally tally;
    for (const StageSnapshot& s : grid_) {
      const auto* d = std::get_if<Deducted>(&s.outcome);
      if (!d) {
        ++tally.vacuous;
        continue;
      }
      ++tally.checked;
      if (d->n != s.b_set.min()) tally.fail(Json{{"stage", to_string(s.alpha)}, {"a", d->n}});
    }
    return tally.finish(ClaimId::kEq7DeductedIsMin, stage_range_);
  }

  Verdict eq8() {
    Tally tally;
    for (const StageSnapshot& s : grid_) {
      if (s.b_set.empty()) {
        ++tally.vacuous;
        continue;
      }
      ++tally.checked;
      const Nat bound = s.b_set.min();
      if (s.a_naturals.is_cofinite()) {
        tally.fail(Json{{"stage", to_string(s.alpha)}});
        continue;
      }
      for (Nat x : s.a_naturals.listed()) {
        if (x >= config_.window) break;
        if (x > bound) {
          tally.fail(Json{{"stage", to_string(s.alpha)}, {"x", x}, {"min_B", bound}});
          break;
        }
      }
    }
    return tally.finish(ClaimId::kEq8PastBelowFuture,
                        stage_range_ + "; members of A below window " +
                            std::to_string(config_.window));
  }

  Verdict eq9() {
    Tally tally;
    for (auto [i, j] : pairs_) {
      const StageSnapshot& beta = grid_[i];
      const StageSnapshot& alpha = grid_[j];
      if (i == j || alpha.b_set.empty()) {
        ++tally.vacuous;
        continue;
      }
      ++tally.checked;
      if (beta.b_set.min() > alpha.b_set.min()) {
        tally.fail(Json{{"beta", to_string(beta.alpha)}, {"alpha", to_string(alpha.alpha)}});
      }
    }
    return tally.finish(ClaimId::kEq9MonotoneMin, pair_range_);
  }

  Verdict lemma1_1() {
    Tally tally;
    for (auto [i, j] : pairs_) {
      const StageSnapshot& beta = grid_[i];
      const StageSnapshot& alpha = grid_[j];
      ++tally.checked;
      if (!a_subset(beta, alpha) || !alpha.b_set.subset_of(beta.b_set)) {
        tally.fail(Json{{"beta", to_string(beta.alpha)}, {"alpha", to_string(alpha.alpha)}});
      }
    }
    return tally.finish(ClaimId::kLemma1_1Nesting, pair_range_);
  }

  Verdict lemma1_2() {
    Tally tally;
    for (auto [i, j] : pairs_) {
      const StageSnapshot& beta = grid_[i];
      const StageSnapshot& alpha = grid_[j];
      if (i == j || card_size(beta.b_set.card()) <= 1 || card_size(alpha.b_set.card()) <= 1) {
        ++tally.vacuous;
        continue;
      }
      ++tally.checked;
      if (beta.b_set == alpha.b_set) {
        tally.fail(Json{{"beta", to_string(beta.alpha)}, {"alpha", to_string(alpha.alpha)}});
      }
    }
    return tally.finish(ClaimId::kLemma1_2NonRepetition, pair_range_);
  }

  Verdict def4() {
    Tally tally;
    const Ordinal omega = Ordinal::omega();
    Json samples = Json::object();
    for (const StageSnapshot& s : grid_) {
      ++tally.checked;
      const bool by = cannot_deduct_by(s.alpha);
      const bool direct = !stage_closed_form(s.alpha.successor()).b_set.empty();
      if (by != direct || by != (s.alpha < omega)) {
        tally.fail(Json{{"stage", to_string(s.alpha)}, {"cannot_deduct_by", by}});
      }
      if (!s.alpha.is_finite() || s.alpha == Ordinal()) samples[to_string(s.alpha)] = by;
    }
    Verdict v = tally.finish(ClaimId::kDef4CannotByStep, stage_range_);
    if (v.status == Status::kVerified) v.witness = Json{{"cannot_deduct_by", samples}};
    return v;
  }

  Verdict def5() {
    Tally tally;
    const Ordinal omega = Ordinal::omega();
    // Finite bounds: enumerate every alpha < beta through a running prefix.
    bool prefix = true;
    for (Nat beta = 0; beta <= config_.finite_stages; ++beta) {
      if (beta > 0) prefix = prefix && cannot_deduct_by(Ordinal::from_natural(beta - 1));
      ++tally.checked;
      if (cannot_deduct_all_upto(Ordinal::from_natural(beta)) != prefix) {
        tally.fail(Json{{"beta", beta}});
      }
    }
    // Infinite bounds: enumerate the examined stages below beta.
    for (const StageSnapshot& b : grid_) {
      if (b.alpha.is_finite()) continue;
      bool all = true;
      for (const StageSnapshot& a : grid_) {
        if (a.alpha < b.alpha) all = all && cannot_deduct_by(a.alpha);
      }
      ++tally.checked;
      if (cannot_deduct_all_upto(b.alpha) != all) tally.fail(Json{{"beta", to_string(b.alpha)}});
    }
    Verdict v = tally.finish(ClaimId::kDef5CannotAll,
                             "bounds 0.." + std::to_string(config_.finite_stages) +
                                 " enumerated; limit bounds over " + stage_range_);
    if (v.status == Status::kVerified) {
      const StageSnapshot at_omega = stage_closed_form(omega);
      Json w;
      w["cannot_deduct_all_upto(w)"] = cannot_deduct_all_upto(omega);
      w["B_w"] = to_string(at_omega.b_set);
      w["card_B_w"] = card_text(at_omega.b_set);
      w["cannot_deduct_all_upto(w+1)"] = cannot_deduct_all_upto(omega.successor());
      w["unbounded_form_fails_at"] = to_string(omega);
      v.witness = std::move(w);
    }
    return v;
  }

  Verdict regularity() {
    std::vector<HFSet> sets = vn_table(config_.window, config_.window);
    sets.push_back(sentinel_b());
    sets.push_back(sentinel_c());
    sets.push_back(hf_succ(sentinel_b()));
    sets.push_back(hf_succ(sentinel_c()));
    sets.push_back(hf_intersect(vn_encode(4), sentinel_c()));
    for (std::uint64_t k = 0; k <= kHfTableMax; ++k) sets.push_back(hf_union_all(vn_encode(k)));
    // Seeded random sets built from an ever-growing pool.
    std::mt19937_64 rng(config_.seed ^ 0x5eedULL);
    std::vector<HFSet> pool = {hf_empty()};
    for (int i = 0; i < 256; ++i) {
      std::vector<HFSet> members;
      for (const HFSet& p : pool) {
        if (rng() % 3 == 0) members.push_back(p);
      }
      pool.push_back(HFSet::of(std::move(members)));
      if (pool.size() > 24) pool.erase(pool.begin() + static_cast<long>(rng() % pool.size()));
      sets.push_back(pool.back());
    }
    Tally tally;
    for (const HFSet& s : sets) {
      ++tally.checked;
      if (!check_regular(s)) tally.fail(Json{{"set", to_string(s)}});
    }
    Verdict v = tally.finish(ClaimId::kRegularity,
                             "numerals 0.." + std::to_string(config_.window) +
                                 ", sentinels b and c, their successors, unions and 256 seeded sets");
    if (v.status == Status::kVerified) {
      v.witness = Json{{"b", to_string(sentinel_b())},
                       {"b_is_numeral", vn_decode(sentinel_b()).has_value()},
                       {"c", to_string(sentinel_c())},
                       {"c_is_numeral", vn_decode(sentinel_c()).has_value()}};
    }
    return v;
  }

  Verdict with_finite_contrast(Verdict v, bool theorem) {
    std::size_t verified = 0;
    std::size_t not_reproduced = 0;
    std::size_t survivor_is_max = 0;
    for (std::size_t k = 1; k <= config_.finite_universes; ++k) {
      const NatSet universe = NatSet::finite(iota_list(k));
      const Verdict finite = theorem ? check_thm1(universe) : check_lemma1_3(universe);
      if (finite.status == Status::kVerified) {
        ++verified;
      } else {
        ++not_reproduced;
      }
      const Json& z = theorem ? finite.witness["z"] : finite.witness["survivor"];
      if (z.is_number() && z.get<std::uint64_t>() == k - 1) ++survivor_is_max;
    }
    Json contrast;
    contrast["universes"] = "{0..k-1}, k=1.." + std::to_string(config_.finite_universes);
    contrast["verified"] = verified;
    contrast["not_reproduced"] = not_reproduced;
    contrast["survivor_is_k_minus_1"] = survivor_is_max;
    if (v.witness.is_null()) v.witness = Json::object();
    v.witness["finite_universes"] = std::move(contrast);
    v.checked_range += "; finite universes {0..k-1}, k=1.." +
                       std::to_string(config_.finite_universes);
    return v;
  }

  static bool outcome_matches_card(const StageSnapshot& s) {
    const std::size_t size = card_size(s.b_set.card());
    if (size > 1) return std::holds_alternative<Deducted>(s.outcome);
    if (size == 1) return std::holds_alternative<SentinelB>(s.outcome);
    return std::holds_alternative<SentinelC>(s.outcome);
  }

  const AuditConfig& config_;
  std::mt19937_64 rng_;
  std::vector<StageSnapshot> grid_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::string stage_range_;
  std::string pair_range_;
};

void require_horizon(const Ordinal& horizon) {
  const Ordinal minimum = Ordinal::omega().successor();
  if (horizon < minimum) {
    throw ConfigError("audit horizon " + to_string(horizon) + " is below " + to_string(minimum));
  }
}

// Runs the least-element process over a finite universe to its end.
StageSnapshot run_to_end(const NatSet& universe) {
  if (universe.is_cofinite()) throw ConfigError("finite universe expected");
  const auto trace = simulate_steps(MinChoice{}, universe, universe.listed().size() + 1);
  return trace.back();
}

}  // namespace

std::string_view claim_name(ClaimId id) { return kClaimNames[static_cast<std::size_t>(id)]; }

std::optional<ClaimId> claim_from_name(std::string_view name) {
  for (ClaimId id : kAllClaims) {
    if (claim_name(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view status_name(Status status) {
  return kStatusNames[static_cast<std::size_t>(status)];
}

std::optional<Status> status_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kStatusNames.size(); ++i) {
    if (kStatusNames[i] == name) return static_cast<Status>(i);
  }
  return std::nullopt;
}

std::size_t AuditReport::count(Status status) const {
  return static_cast<std::size_t>(std::count_if(
      verdicts.begin(), verdicts.end(), [&](const Verdict& v) { return v.status == status; }));
}

const Verdict& AuditReport::verdict(ClaimId id) const {
  for (const Verdict& v : verdicts) {
    if (v.claim == id) return v;
  }
  throw std::out_of_range("no verdict for " + std::string(claim_name(id)));
}

std::vector<Ordinal> audit_stage_grid(const AuditConfig& config) {
  std::set<Ordinal> stages;
  for (Nat n = 0; n <= config.finite_stages; ++n) stages.insert(Ordinal::from_natural(n));
  std::mt19937_64 rng(config.seed);
  if (config.random_stage_max > config.finite_stages) {
    const Nat span = config.random_stage_max - config.finite_stages;
    for (std::size_t i = 0; i < config.random_stages; ++i) {
      stages.insert(Ordinal::from_natural(config.finite_stages + 1 + rng() % span));
    }
  }
  const Ordinal omega = Ordinal::omega();
  for (const Ordinal& limit : {omega, omega.successor(), omega + Ordinal::from_natural(50),
                               omega * Ordinal::from_natural(2), config.horizon}) {
    if (limit <= config.horizon) stages.insert(limit);
  }
  return {stages.begin(), stages.end()};
}

AuditReport run_audit(const AuditConfig& config) {
  require_horizon(config.horizon);
  if (config.window == 0 || config.window > kMaxWindow) {
    throw ConfigError("audit window must be in 1.." + std::to_string(kMaxWindow));
  }
  return Auditor(config).run();
}

AuditReport run_audit(const Ordinal& horizon, std::uint64_t seed, Nat window) {
  AuditConfig config;
  config.horizon = horizon;
  config.seed = seed;
  config.window = window;
  return run_audit(config);
}

Verdict check_lemma1_3(const Ordinal& horizon) {
  require_horizon(horizon);
  const std::string range = "least-element process on N, stages <= " + to_string(horizon);
  const auto end = first_end_stage(horizon);
  if (end && end->kind == EndKind::kSingleton) {
    return verdict(ClaimId::kLemma1_3SingletonEnd, Status::kVerified, range, end_json(*end));
  }
  Json witness = end ? end_json(*end) : Json{{"stage", nullptr}, {"end", nullptr}};
  if (end) witness["card"] = card_text(stage_closed_form(end->stage).b_set);
  return verdict(ClaimId::kLemma1_3SingletonEnd, Status::kNotReproduced, range, witness);
}

Verdict check_lemma1_3(const NatSet& finite_universe) {
  const StageSnapshot last = run_to_end(finite_universe);
  const std::string range = "least-element process on " + to_string(finite_universe);
  Json witness;
  witness["stage"] = to_string(last.alpha);
  if (std::holds_alternative<SentinelB>(last.outcome)) {
    witness["end"] = to_string(EndKind::kSingleton);
    witness["survivor"] = last.b_set.min();
    return verdict(ClaimId::kLemma1_3SingletonEnd, Status::kVerified, range, witness);
  }
  witness["end"] = to_string(EndKind::kEmpty);
  return verdict(ClaimId::kLemma1_3SingletonEnd, Status::kNotReproduced, range, witness);
}

Verdict check_thm1(const Ordinal& horizon) {
  require_horizon(horizon);
  const std::string range = "least-element process on N, stages <= " + to_string(horizon);
  const auto end = first_end_stage(horizon);
  if (end && end->kind == EndKind::kSingleton) {
    Json witness = end_json(*end);
    witness["z"] = stage_closed_form(end->stage).b_set.min();
    return verdict(ClaimId::kThm1GreatestExists, Status::kVerified, range, witness);
  }
  Json witness;
  witness["singleton_stage"] = nullptr;
  witness["z"] = nullptr;
  witness["first_end"] = end ? end_json(*end) : Json(nullptr);
  return verdict(ClaimId::kThm1GreatestExists, Status::kNotReproduced, range, witness);
}

Verdict check_thm1(const NatSet& finite_universe) {
  const StageSnapshot last = run_to_end(finite_universe);
  const std::string range = "least-element process on " + to_string(finite_universe);
  const auto members = finite_universe.listed();
  const auto greatest = has_greatest(members);
  Json witness;
  witness["stage"] = to_string(last.alpha);
  witness["has_greatest"] = greatest ? Json(*greatest) : Json(nullptr);
  if (!std::holds_alternative<SentinelB>(last.outcome)) {
    witness["z"] = nullptr;
    return verdict(ClaimId::kThm1GreatestExists, Status::kNotReproduced, range, witness);
  }
  const Nat z = last.b_set.min();
  witness["z"] = z;
  // The survivor and the greatest-element predicate are independent routes.
  const Status status = greatest == std::optional<std::uint64_t>(z) ? Status::kVerified
                                                                     : Status::kNotReproduced;
  return verdict(ClaimId::kThm1GreatestExists, status, range, witness);
}

Verdict check_thm2(const Ordinal& horizon) {
  const Verdict thm1 = check_thm1(horizon);
  std::size_t checked = 0;
  std::size_t violations = 0;
  for (const HFSet& s : vn_table(kDefaultNumeralLimit)) {
    ++checked;
    if (!check_regular(s)) ++violations;
  }
  for (const HFSet& s : {sentinel_b(), sentinel_c()}) {
    ++checked;
    if (!check_regular(s)) ++violations;
  }
  // On a finite universe {0..k-1} the survivor z = k-1 is never the
  // universe itself (vn(k)), so the step "z = N" has no finite analogue.
  std::size_t z_is_universe = 0;
  const auto numerals = vn_table(kHfTableMax + 1, kHfTableMax + 1);
  for (std::uint64_t k = 1; k <= kHfTableMax; ++k) {
    if (numerals[k - 1] == numerals[k]) ++z_is_universe;
  }
  Json witness;
  witness["requires"] = claim_name(ClaimId::kThm1GreatestExists);
  witness["thm1_status"] = status_name(thm1.status);
  witness["z"] = thm1.witness.contains("z") ? thm1.witness["z"] : Json(nullptr);
  witness["regularity"] = Json{{"checked", checked}, {"violations", violations}};
  witness["finite_analogue"] = Json{{"universes", "k=1.." + std::to_string(kHfTableMax)},
                                    {"z_equals_universe", z_is_universe}};
  return verdict(ClaimId::kThm2SelfMember, Status::kNotReproduced,
                 thm1.checked_range + "; regularity over numerals 0.." +
                     std::to_string(kDefaultNumeralLimit) + " and sentinels",
                 witness);
}

Verdict check_eq10(Nat window) {
  if (window == 0 || window > kMaxWindow) {
    throw ConfigError("eq10 window must be in 1.." + std::to_string(kMaxWindow));
  }
  const std::string range = "pointwise, n < " + std::to_string(window);
  const NatSet naturals = NatSet::full();
  const auto numerals = vn_table(window, window);
  for (Nat n = 0; n < window; ++n) {
    // n is in the union of N because n is in n+1 and n+1 is in N.
    const bool in_union = hf_mem(numerals[n], numerals[n + 1]) && naturals.contains(n + 1);
    if (!in_union || !naturals.contains(n)) {
      return verdict(ClaimId::kEq10UnionN, Status::kNotReproduced, range, Json{{"n", n}});
    }
  }
  Json contrast = Json::array();
  for (std::uint64_t k = 1; k <= kHfTableMax; ++k) {
    const HFSet u = hf_union_all(vn_encode(k));
    const auto decoded = vn_decode(u);
    if (u != vn_encode(k - 1) || u == vn_encode(k)) {
      return verdict(ClaimId::kEq10UnionN, Status::kNotReproduced, range, Json{{"k", k}});
    }
    contrast.push_back(Json{{"k", k}, {"union", decoded ? Json(*decoded) : Json(nullptr)}});
  }
  Json witness;
  witness["memberships"] = window;
  witness["finite_contrast"] = std::move(contrast);
  return verdict(ClaimId::kEq10UnionN, Status::kVerified, range, witness);
}

Json to_json(const Verdict& verdict) {
  Json j;
  j["claim"] = claim_name(verdict.claim);
  j["status"] = status_name(verdict.status);
  j["checked_range"] = verdict.checked_range;
  j["witness"] = verdict.witness;
  return j;
}

Json to_json(const AuditReport& report) {
  Json config;
  config["horizon"] = to_string(report.config.horizon);
  config["seed"] = report.config.seed;
  config["window"] = report.config.window;
  config["finite_stages"] = report.config.finite_stages;
  config["random_stages"] = report.config.random_stages;
  config["random_stage_max"] = report.config.random_stage_max;
  config["sampled_pairs"] = report.config.sampled_pairs;
  config["finite_universes"] = report.config.finite_universes;
  Json verdicts = Json::array();
  for (const Verdict& v : report.verdicts) verdicts.push_back(to_json(v));
  Json summary;
  for (std::size_t i = 0; i < kStatusNames.size(); ++i) {
    summary[std::string(kStatusNames[i])] = report.count(static_cast<Status>(i));
  }
  Json j;
  j["config"] = std::move(config);
  j["verdicts"] = std::move(verdicts);
  j["summary"] = std::move(summary);
  return j;
}

std::string render_text(const AuditReport& report) {
  std::ostringstream out;
  out << "audit horizon=" << to_string(report.config.horizon) << " seed=" << report.config.seed
      << " window=" << report.config.window << '\n';
  for (const Verdict& v : report.verdicts) {
    out << claim_name(v.claim);
    for (std::size_t pad = claim_name(v.claim).size(); pad < 24; ++pad) out << ' ';
    out << status_name(v.status);
    for (std::size_t pad = status_name(v.status).size(); pad < 15; ++pad) out << ' ';
    out << v.checked_range << '\n';
    if (!v.witness.is_null()) out << "    witness: " << v.witness.dump() << '\n';
  }
  out << "summary:";
  for (std::size_t i = 0; i < kStatusNames.size(); ++i) {
    out << ' ' << kStatusNames[i] << '=' << report.count(static_cast<Status>(i));
  }
  out << '\n';
  return out.str();
}

VerdictProfile parse_profile(const Json& profile) {
  if (!profile.is_object()) throw ConfigError("verdict profile must be a JSON object");
  VerdictProfile out;
  for (const auto& [name, status] : profile.items()) {
    const auto id = claim_from_name(name);
    const auto st = status.is_string() ? status_from_name(status.get<std::string>())
                                       : std::optional<Status>();
    if (!id || !st) throw ConfigError("bad verdict profile entry '" + name + "'");
    out[*id] = *st;
  }
  return out;
}

std::vector<std::string> profile_deviations(const AuditReport& report,
                                            const VerdictProfile& profile) {
  std::vector<std::string> out;
  for (ClaimId id : kAllClaims) {
    auto expected = profile.find(id);
    const Verdict* actual = nullptr;
    for (const Verdict& v : report.verdicts) {
      if (v.claim == id) actual = &v;
    }
    const std::string name(claim_name(id));
    if (expected == profile.end()) {
      out.push_back(name + ": missing from profile");
    } else if (!actual) {
      out.push_back(name + ": missing from report");
    } else if (actual->status != expected->second) {
      out.push_back(name + ": expected " + std::string(status_name(expected->second)) + ", got " +
                    std::string(status_name(actual->status)));
    }
  }
  return out;
}

}  // namespace transfinite
