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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "golden_profile.hpp"
#include "json.hpp"
#include "transfinite/audit.hpp"
#include "transfinite/errors.hpp"
#include "transfinite/hfset.hpp"
#include "transfinite/natset.hpp"
#include "transfinite/ordinal.hpp"

namespace transfinite::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { kText, kJson, kCsv };

struct CliConfig {
  std::string horizon = "w*2+100";
  std::size_t steps = 100;
  std::string universe;
  std::optional<std::size_t> size;
  std::string strategy = "min";
  std::uint64_t seed = 42;
  Nat window = 1000;
  Format format = Format::kText;
  std::string output;
  std::string profile;
  std::vector<std::string> expression;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string a_text(const StageSnapshot& s) {
  std::string out = to_string(s.a_naturals);
  if (s.a_has_b) out += " u {b}";
  if (s.a_has_c) out += " u {c}";
  return out;
}

Json snapshot_json(const StageSnapshot& s) {
  Json j;
  j["alpha"] = to_string(s.alpha);
  j["outcome"] = to_string(s.outcome);
  j["card"] = to_string(s.b_set.card());
  j["A"] = a_text(s);
  j["B"] = to_string(s.b_set);
  return j;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + ' ' : s + std::string(width - s.size(), ' ');
}

void write_trace(const std::vector<StageSnapshot>& rows, Format format, std::ostream& out) {
  switch (format) {
    case Format::kText:
      out << pad("alpha", 12) << pad("outcome", 9) << pad("card", 8) << pad("A", 24) << "B\n";
      for (const StageSnapshot& s : rows) {
        out << pad(to_string(s.alpha), 12) << pad(to_string(s.outcome), 9)
            << pad(to_string(s.b_set.card()), 8) << pad(a_text(s), 24) << to_string(s.b_set)
            << '\n';
      }
      break;
    case Format::kJson:
      for (const StageSnapshot& s : rows) out << snapshot_json(s).dump() << '\n';
      break;
    case Format::kCsv:
      out << "alpha,outcome,card,A,B\n";
      for (const StageSnapshot& s : rows) {
        out << csv_field(to_string(s.alpha)) << ',' << to_string(s.outcome) << ','
            << to_string(s.b_set.card()) << ',' << csv_field(a_text(s)) << ','
            << csv_field(to_string(s.b_set)) << '\n';
      }
      break;
  }
}

// Writes to --output when given, otherwise to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(&out) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ConfigError("cannot open output file '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

int cmd_trace(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const Ordinal horizon = parse_ordinal(config.horizon);
  const Strategy strategy = parse_strategy(config.strategy);
  std::size_t count = config.steps;
  if (auto h = horizon.finite_value()) {
    if (*h < count) count = h->convert_to<std::size_t>() + 1;
  }
  std::vector<StageSnapshot> rows = simulate_steps(strategy, NatSet::full(), count);

  const Ordinal omega = Ordinal::omega();
  if (horizon >= omega) {
    if (admits_limit_stages(strategy)) {
      rows.push_back(stage_closed_form(omega));
      if (horizon >= omega.successor()) rows.push_back(stage_closed_form(omega.successor()));
      if (horizon > omega.successor()) rows.push_back(stage_closed_form(horizon));
    } else {
      err << "note: limit stage not evaluable for strategy " << to_string(strategy) << '\n';
    }
  }
  Sink sink(config.output, out);
  write_trace(rows, config.format, sink.stream());
  return kOk;
}

int cmd_audit(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const AuditReport report = run_audit(parse_ordinal(config.horizon), config.seed, config.window);

  Json profile_json;
  if (config.profile.empty()) {
    profile_json = Json::parse(kGoldenProfile);
  } else {
    std::ifstream in(config.profile);
    if (!in) throw ConfigError("cannot read profile '" + config.profile + "'");
    try {
      profile_json = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ConfigError(std::string("bad profile: ") + e.what());
    }
  }
  const VerdictProfile profile = parse_profile(profile_json);

  Sink sink(config.output, out);
  std::ostream& o = sink.stream();
  switch (config.format) {
    case Format::kText:
      o << render_text(report);
      break;
    case Format::kJson:
      o << to_json(report).dump(2) << '\n';
      break;
    case Format::kCsv:
      o << "claim,status,checked_range,witness\n";
      for (const Verdict& v : report.verdicts) {
        o << claim_name(v.claim) << ',' << status_name(v.status) << ','
          << csv_field(v.checked_range) << ',' << csv_field(v.witness.dump()) << '\n';
      }
      break;
  }

  const auto deviations = profile_deviations(report, profile);
  for (const std::string& d : deviations) err << "deviation: " << d << '\n';
  return deviations.empty() ? kOk : kDeviation;
}

std::vector<Nat> parse_universe(const std::string& text) {
  std::vector<Nat> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 19) {
      throw ConfigError("bad universe member '" + item + "'");
    }
    out.push_back(std::stoull(item));
  }
  return out;
}

int cmd_finite(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.size.has_value() == !config.universe.empty()) {
    throw ConfigError("finite needs exactly one of --universe or --size");
  }
  std::vector<Nat> members;
  if (config.size) {
    for (Nat i = 0; i < *config.size; ++i) members.push_back(i);
  } else {
    members = parse_universe(config.universe);
  }
  if (members.empty()) throw ConfigError("universe is empty");
  const NatSet universe = NatSet::finite(members);
  const Strategy strategy = parse_strategy(config.strategy);

  const auto trace = simulate_steps(strategy, universe, members.size() + 1);
  const StageSnapshot& last = trace.back();
  const bool singleton = std::holds_alternative<SentinelB>(last.outcome);
  const EndKind kind = singleton ? EndKind::kSingleton : EndKind::kEmpty;
  const std::optional<Nat> survivor =
      singleton ? std::optional<Nat>(last.b_set.min()) : std::nullopt;

  std::optional<std::uint64_t> greatest;
  bool cross_checked = true;
  try {
    greatest = has_greatest(universe.listed());
  } catch (const ResourceError&) {
    cross_checked = false;
  }
  const bool agrees = !cross_checked || greatest == survivor;

  Sink sink(config.output, out);
  std::ostream& o = sink.stream();
  const std::string deductions = to_string(last.alpha);
  switch (config.format) {
    case Format::kText:
      o << "universe:     " << to_string(universe) << '\n'
        << "strategy:     " << to_string(strategy) << '\n'
        << "end stage:    " << to_string(last.alpha) << " (" << to_string(kind) << ")\n"
        << "survivor:     " << (survivor ? std::to_string(*survivor) : "none") << '\n'
        << "deductions:   " << deductions << '\n'
        << "has_greatest: ";
      if (!cross_checked) {
        o << "skipped (numeral limit)\n";
      } else {
        o << (greatest ? std::to_string(*greatest) : "none")
          << (agrees ? " (agrees)" : " (DISAGREES)") << '\n';
      }
      break;
    case Format::kJson: {
      Json j;
      j["universe"] = to_string(universe);
      j["strategy"] = to_string(strategy);
      j["end_stage"] = to_string(last.alpha);
      j["end"] = to_string(kind);
      j["survivor"] = survivor ? Json(*survivor) : Json(nullptr);
      j["deductions"] = deductions;
      j["has_greatest"] = cross_checked && greatest ? Json(*greatest) : Json(nullptr);
      j["cross_checked"] = cross_checked;
      j["agrees"] = agrees;
      o << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      o << "universe,strategy,end_stage,end,survivor,deductions,has_greatest,agrees\n"
        << csv_field(to_string(universe)) << ',' << csv_field(to_string(strategy)) << ','
        << to_string(last.alpha) << ',' << to_string(kind) << ','
        << (survivor ? std::to_string(*survivor) : "") << ',' << deductions << ','
        << (cross_checked && greatest ? std::to_string(*greatest) : "") << ','
        << (agrees ? "true" : "false") << '\n';
      break;
  }
  if (!agrees) {
    err << "deviation: survivor and greatest element disagree\n";
    return kDeviation;
  }
  return kOk;
}

int cmd_ord(const CliConfig& config, std::ostream& out) {
  std::string text;
  for (const std::string& part : config.expression) text += part;
  const Ordinal value = parse_ordinal(text);
  const OrdinalClass cls = classify(value);
  Sink sink(config.output, out);
  std::ostream& o = sink.stream();
  if (config.format == Format::kJson) {
    Json j;
    j["input"] = text;
    j["canonical"] = to_string(value);
    j["class"] = std::holds_alternative<ZeroOrdinal>(cls)     ? "zero"
                 : std::holds_alternative<LimitOrdinal>(cls) ? "limit"
                                                             : "successor";
    if (const auto* s = std::get_if<SuccessorOrdinal>(&cls)) {
      j["predecessor"] = to_string(s->predecessor);
    }
    o << j.dump() << '\n';
  } else {
    o << to_string(value) << " (" << describe(cls) << ")\n";
  }
  return kOk;
}

}  // namespace

Strategy parse_strategy(const std::string& text) {
  if (text == "min") return MinChoice{};
  auto digits = [&](const std::string& s) {
    if (s.empty() || s.size() > 18 || !std::all_of(s.begin(), s.end(), ::isdigit)) {
      throw ConfigError("bad strategy '" + text + "'");
    }
    return static_cast<Nat>(std::stoull(s));
  };
  if (text.rfind("kth:", 0) == 0) {
    const Nat k = digits(text.substr(4));
    if (k == 0) throw ConfigError("kth strategy needs k >= 1");
    return KthSmallest{static_cast<std::size_t>(k)};
  }
  if (text.rfind("scripted:", 0) == 0) {
    Scripted scripted;
    std::stringstream in(text.substr(9));
    std::string entry;
    while (std::getline(in, entry, ',')) {
      const auto eq = entry.find('=');
      const auto slash = entry.find('/');
      if (eq == std::string::npos || slash == std::string::npos || slash < eq) {
        throw ConfigError("bad scripted entry '" + entry + "'");
      }
      const Nat step = digits(entry.substr(0, eq));
      scripted.table[step] = ScriptedChoice{digits(entry.substr(eq + 1, slash - eq - 1)),
                                            digits(entry.substr(slash + 1))};
    }
    return scripted;
  }
  throw ConfigError("unknown strategy '" + text + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Executes the transfinite deduction process over N and audits claims about it."};
  app.name("transfinite");
  app.require_subcommand(1);

  const std::map<std::string, Format> formats = {
      {"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--output", config.output, "Write output to this file");
  };

  CLI::App* trace = app.add_subcommand("trace", "Print stage snapshots");
  trace->add_option("--horizon", config.horizon, "Largest stage (ordinal text)");
  trace->add_option("--steps", config.steps, "Number of finite stages to simulate");
  trace->add_option("--strategy", config.strategy, "min | kth:<k> | scripted:<s>=<x>/<y>,...");
  add_format(trace);

  CLI::App* audit = app.add_subcommand("audit", "Audit every claim and compare to the golden profile");
  audit->add_option("--horizon", config.horizon, "Largest stage examined (at least w+1)");
  audit->add_option("--seed", config.seed, "Sampling seed");
  audit->add_option("--window", config.window, "Pointwise window for N-wide checks");
  audit->add_option("--profile", config.profile, "Expected verdict profile (JSON)");
  add_format(audit);

  CLI::App* finite = app.add_subcommand("finite", "Run the process on a finite universe");
  finite->add_option("--universe", config.universe, "Comma-separated members, e.g. 3,1,4");
  finite->add_option("--size", config.size, "Use the universe {0..size-1}");
  finite->add_option("--strategy", config.strategy, "min | kth:<k> | scripted:<s>=<x>/<y>,...");
  add_format(finite);

  CLI::App* ord = app.add_subcommand("ord", "Normalize and classify an ordinal");
  ord->add_option("expression", config.expression, "Ordinal text, e.g. w*2+3")->required();
  add_format(ord);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; everything else is a usage error.
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (trace->parsed()) return cmd_trace(config, out, err);
    if (audit->parsed()) return cmd_audit(config, out, err);
    if (finite->parsed()) return cmd_finite(config, out, err);
    if (ord->parsed()) return cmd_ord(config, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace transfinite::cli
