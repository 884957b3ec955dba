/* Copyright 2026 The PSL Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// psl: search for proofs with strategies, replay and check files.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "driver.h"
#include "json.hpp"
#include "psl/engine.h"
#include "psl/scriptgen.h"

namespace psl::tools {
namespace {

struct ProveOptions {
  std::string theory;
  std::vector<std::string> goals;
  std::string strategy;
  std::vector<std::string> strategy_files;
  int timeout = 60;
  std::size_t max_depth = 30;
  std::size_t deepening_step = 1;
  std::size_t threads = 1;
  std::size_t variant_cap = TacticConfig{}.variant_cap;
  std::string emit;
  std::string report;
  bool no_prelude = false;
  bool verbose = false;
};

CorePtr resolve_strategy(const ProveOptions& o, const TacticEnv& env) {
  StrategyFile defs;
  if (!o.no_prelude) defs = load_prelude();
  for (const auto& path : o.strategy_files) {
    try {
      defs.merge(parse_strategy_file(read_file(path), &defs));
    } catch (const ParseError& e) {
      throw UsageError(path + ":" + e.what());
    } catch (const std::runtime_error& e) {
      throw UsageError(path + ": " + e.what());
    }
  }
  Strategy s;
  if (defs.find(o.strategy)) {
    s = Strategy::make_ref(o.strategy);
  } else {
    try {
      s = parse_strategy(o.strategy, defs);
    } catch (const ParseError&) {
      throw UsageError("unknown strategy '" + o.strategy + "'");
    }
  }
  try {
    return desugar(s, defs, env.users->names());
  } catch (const DesugarError& e) {
    throw UsageError(e.what());
  }
}

int cmd_prove(const ProveOptions& o) {
  if (o.timeout <= 0) throw UsageError("--timeout must be positive");
  if (o.threads < 1) throw UsageError("--threads must be at least 1");
  if (o.max_depth < 1 || o.deepening_step < 1)
    throw UsageError("--max-depth and --deepening-step must be at least 1");

  Theory theory = load_theory_file(o.theory);
  GoalList goals = select_goals(theory, o.goals);

  SearchOptions options;
  options.env.config.variant_cap = o.variant_cap;
  options.threads = o.threads;
  options.budget = DepthBudget::deepening(o.max_depth, o.deepening_step);
  options.budget.timeout = std::chrono::seconds(o.timeout);
  CorePtr core = resolve_strategy(o, options.env);
  if (o.verbose) std::cerr << "strategy: " << render(*core) << "\n";

  ProofState start(theory.context, goals);
  SearchOutcome outcome = search(core, start, options);

  std::vector<std::string> counterexamples, warnings;
  for (const auto& m : options.env.diagnostics->messages()) {
    auto& bucket = m.rfind("quickcheck:", 0) == 0 || m.rfind("nitpick:", 0) == 0
                       ? counterexamples
                       : warnings;
    if (std::find(bucket.begin(), bucket.end(), m) == bucket.end())
      bucket.push_back(m);
  }
  if (o.verbose)
    for (const auto& w : warnings) std::cerr << w << "\n";

  const TacticStats& stats = *options.env.stats;
  nlohmann::json report;
  report["strategy"] = o.strategy;
  report["goals"] = nlohmann::json::array();
  for (const auto& g : goals) report["goals"].push_back(g.label);
  report["status"] = to_string(outcome.status);
  report["wall_seconds"] = outcome.seconds;
  report["atoms_applied"] = stats.atoms_applied.load();
  report["variants_generated"] = stats.variants_generated.load();
  report["variants_failed"] = stats.variants_failed.load();
  report["variants_deduplicated"] = stats.variants_duplicate.load();
  report["max_log_length"] = outcome.max_log();
  report["peak_suspended_branches"] = outcome.peak_suspended();
  report["iterations"] = nlohmann::json::array();
  for (const auto& it : outcome.iterations)
    report["iterations"].push_back({{"limit", it.limit},
                                    {"atoms", it.atoms},
                                    {"max_log_length", it.max_log}});
  report["counterexamples"] = counterexamples;
  report["warnings"] = warnings;

  int code = kExitNoProof;
  if (outcome.result) {
    const SearchState& r = *outcome.result;
    ProofScript script = emit_script(r.log, r.state);
    std::string text = render(script);
    report["log_length"] = r.log.size();
    report["script_steps"] = script.steps.size();
    report["final_state"] = to_string(r.state);
    if (!o.emit.empty()) write_file(o.emit, text);
    std::cout << text;
    if (script.complete) {
      report["result"] = "proved";
      code = kExitOk;
    } else {
      report["result"] = "incomplete";
      std::cerr << "incomplete: the strategy succeeded but goals remain\n";
    }
  } else {
    report["result"] = to_string(outcome.status);
    std::cerr << "no proof found (" << to_string(outcome.status) << ")\n";
  }
  for (const auto& c : counterexamples) std::cerr << c << "\n";

  std::string json = report.dump();
  if (!o.report.empty()) write_file(o.report, json + "\n");
  std::cout << json << "\n";
  return code;
}

}  // namespace
}  // namespace psl::tools

int main(int argc, char** argv) {
  using namespace psl::tools;
  CLI::App app{"Proof search with strategies"};
  app.require_subcommand(1);

  ProveOptions prove;
  auto* p = app.add_subcommand("prove", "search for a proof and emit a script");
  p->add_option("--theory", prove.theory, "theory file")->required();
  p->add_option("--goal", prove.goals, "goal label(s); default: all goals");
  p->add_option("--strategy", prove.strategy, "strategy name or expression")
      ->required();
  p->add_option("--strategy-file", prove.strategy_files, "extra strategy file");
  p->add_option("--timeout", prove.timeout, "seconds")->capture_default_str();
  p->add_option("--max-depth", prove.max_depth, "largest deepening limit")
      ->capture_default_str();
  p->add_option("--deepening-step", prove.deepening_step, "limit increment")
      ->capture_default_str();
  p->add_option("--threads", prove.threads, "parallelism")->capture_default_str();
  p->add_option("--variant-cap", prove.variant_cap, "variants per dynamic atom")
      ->capture_default_str();
  p->add_option("--emit", prove.emit, "write the script here");
  p->add_option("--report", prove.report, "write the JSON report here");
  p->add_flag("--no-prelude", prove.no_prelude, "do not load the default strategies");
  p->add_flag("-v,--verbose", prove.verbose, "print diagnostics");

  ReplayOptions replay;
  auto* r = app.add_subcommand("replay", "replay a script without search");
  r->add_option("--theory", replay.theory, "theory file")->required();
  r->add_option("--goal", replay.goals, "goal label(s); default: all goals");
  r->add_option("--script", replay.script, "script file")->required();
  r->add_flag("--print-state", replay.print_state, "print the final state");

  std::vector<std::string> check_paths;
  bool check_no_prelude = false;
  auto* c = app.add_subcommand("check", "parse theory, strategy and script files");
  c->add_option("paths", check_paths, "files")->required();
  c->add_flag("--no-prelude", check_no_prelude, "check .psl files on their own");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*p) return cmd_prove(prove);
    if (*r) return cmd_replay(replay, std::cout, std::cerr);
    return cmd_check(check_paths, check_no_prelude, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
