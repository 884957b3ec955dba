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

#include "driver.h"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "psl/scriptgen.h"
#include "psl/tactics.h"
#include "psl_prelude.h"

namespace psl::tools {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

Theory load_theory_file(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_theory(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

GoalList select_goals(const Theory& theory,
                      const std::vector<std::string>& labels) {
  if (labels.empty()) return theory.goals;
  GoalList out;
  for (const auto& item : labels) {
    std::stringstream names(item);
    for (std::string label; std::getline(names, label, ',');) {
      if (label.empty()) continue;
      const Goal* g = theory.find_goal(label);
      if (!g) throw UsageError("no goal named '" + label + "'");
      out.push_back(*g);
    }
  }
  if (out.empty()) throw UsageError("no goal selected");
  return out;
}

StrategyFile load_prelude() {
  const char* env = std::getenv("PSL_PRELUDE");
  std::string origin = env ? env : "<prelude>";
  std::string text = env ? read_file(env) : std::string(kPreludeText);
  try {
    return parse_strategy_file(text);
  } catch (const ParseError& e) {
    throw UsageError(origin + ":" + e.what());
  }
}

int cmd_replay(const ReplayOptions& options, std::ostream& out,
               std::ostream& err) {
  Theory theory = load_theory_file(options.theory);
  GoalList goals;
  try {
    goals = select_goals(theory, options.goals);
  } catch (const UsageError& e) {
    // A script checked against the wrong goal is a failed replay.
    err << "replay failed: " << e.what() << "\n";
    return kExitNoProof;
  }
  ProofScript script;
  try {
    script = parse_script(read_file(options.script));
  } catch (const ScriptError& e) {
    throw UsageError(options.script + ": " + e.what());
  }

  ProofState start(theory.context, goals);
  TacticEnv env;
  ReplayResult result{start, {}};
  try {
    result = replay(script, start, env);
  } catch (const ReplayError& e) {
    err << "replay failed: " << e.what() << "\n";
    return kExitNoProof;
  }
  if (options.print_state) out << to_string(result.state);
  if (script.complete) {
    out << "replayed " << script.steps.size() << " step(s): proof complete\n";
    return kExitOk;
  }
  if (result.state.solved()) {
    err << "replay failed: script ends with 'oops' but no goals remain\n";
    return kExitNoProof;
  }
  std::vector<std::string> left;
  for (auto frame = result.state.stack().rbegin();
       frame != result.state.stack().rend(); ++frame)
    for (const auto& g : *frame) left.push_back(g.label);
  if (!script.remaining.empty() && script.remaining != left) {
    err << "replay failed: remaining goals differ from the script's note\n";
    return kExitNoProof;
  }
  out << "replayed " << script.steps.size() << " step(s): incomplete, remaining:";
  for (const auto& l : left) out << " " << l;
  out << "\n";
  return kExitOk;
}

int cmd_check(const std::vector<std::string>& paths, bool no_prelude,
              std::ostream& out, std::ostream& err) {
  int status = kExitOk;
  StrategyFile prelude;
  if (!no_prelude) prelude = load_prelude();
  for (const auto& path : paths) {
    auto ends_with = [&](const std::string& ext) {
      return path.size() >= ext.size() &&
             path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
    };
    try {
      std::string text = read_file(path);
      if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
        err << path << ": warning: empty file\n";
        continue;
      }
      if (ends_with(".thy")) {
        Theory t = parse_theory(text);
        out << path << ": ok (" << t.context->lemmas().size() << " lemma(s), "
            << t.goals.size() << " goal(s))\n";
      } else if (ends_with(".psl")) {
        // Files that stand alone are fine; others may build on the prelude.
        StrategyFile f;
        try {
          f = parse_strategy_file(text);
        } catch (const ParseError&) {
          if (no_prelude) throw;
          f = parse_strategy_file(text, &prelude);
        }
        out << path << ": ok (" << f.defs.size() << " strategy definition(s))\n";
      } else {
        ProofScript s = parse_script(text);
        out << path << ": ok (" << s.steps.size() << " step(s))\n";
      }
    } catch (const ParseError& e) {
      err << path << ":" << e.what() << "\n";
      status = kExitUsage;
    } catch (const ScriptError& e) {
      err << path << ": " << e.what() << "\n";
      status = kExitUsage;
    } catch (const UsageError& e) {
      err << e.what() << "\n";
      status = kExitUsage;
    }
  }
  return status;
}

}  // namespace psl::tools
