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

#include "psl/scriptgen.h"

#include <sstream>

namespace psl {

namespace {

// Steps written as proof commands rather than as `apply` arguments.
bool is_command(const std::string& text) {
  return text == "defer" || text == "subgoal" || text == "done";
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

ProofScript emit_script(const TraceLog& log, const ProofState& final) {
  ProofScript script;
  for (const auto& e : log.entries())
    if (!e.script_text.empty()) script.steps.push_back({e.script_text, e.result_index});
  script.complete = final.solved();
  if (!script.complete) {
    const auto& stack = final.stack();
    for (auto frame = stack.rbegin(); frame != stack.rend(); ++frame)
      for (const auto& g : *frame) script.remaining.push_back(g.label);
  }
  return script;
}

std::string render(const ProofScript& script) {
  std::string out;
  for (const auto& step : script.steps) {
    if (is_command(step.text))
      out += step.text;
    else if (step.text.find(' ') != std::string::npos)
      out += "apply (" + step.text + ")";
    else
      out += "apply " + step.text;
    out += "\n";
    for (std::size_t i = 0; i < step.back; ++i) out += "back\n";
  }
  if (script.complete) return out + "done\n";
  out += "oops\n";
  if (!script.remaining.empty()) {
    out += "(* remaining:";
    for (const auto& l : script.remaining) out += " " + l;
    out += " *)\n";
  }
  return out;
}

ProofScript parse_script(const std::string& text) {
  ProofScript script;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool terminated = false;
  int done_line = 0;  // line of a trailing `done` not yet known to be final
  bool in_comment = false;

  auto flush_done = [&]() {
    if (done_line) script.steps.push_back({"done", 0});
    done_line = 0;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    // Strip comments, keeping their text for the remaining-goals note.
    std::string code, comment;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (!in_comment && raw.compare(i, 2, "(*") == 0) {
        in_comment = true;
        ++i;
      } else if (in_comment && raw.compare(i, 2, "*)") == 0) {
        in_comment = false;
        ++i;
      } else if (in_comment) {
        comment += raw[i];
      } else {
        code += raw[i];
      }
    }
    std::string line = trim(code);
    if (terminated) {
      if (!line.empty()) throw ScriptError("text after the end of the proof", line_no);
      auto w = words(comment);
      if (!w.empty() && w[0] == "remaining:")
        script.remaining.assign(w.begin() + 1, w.end());
      continue;
    }
    if (line.empty()) continue;

    if (line == "back") {
      if (done_line) {
        flush_done();
      }
      if (script.steps.empty()) throw ScriptError("'back' before any step", line_no);
      ++script.steps.back().back;
      continue;
    }
    flush_done();
    if (line == "done") {
      done_line = line_no;
    } else if (line == "oops") {
      terminated = true;
    } else if (line == "defer" || line == "subgoal") {
      script.steps.push_back({line, 0});
    } else if (line.rfind("apply", 0) == 0 &&
               (line.size() == 5 || line[5] == ' ' || line[5] == '(')) {
      std::string arg = trim(line.substr(5));
      if (!arg.empty() && arg.front() == '(') {
        if (arg.back() != ')') throw ScriptError("unbalanced parenthesis", line_no);
        arg = trim(arg.substr(1, arg.size() - 2));
      }
      if (!parse_tactic_text(arg))
        throw ScriptError("unknown tactic '" + arg + "'", line_no);
      script.steps.push_back({arg, 0});
    } else {
      throw ScriptError("expected 'apply', 'back', 'defer', 'subgoal', "
                        "'done' or 'oops', found '" + line + "'",
                        line_no);
    }
  }
  if (in_comment) throw ScriptError("unterminated comment", line_no);
  if (done_line) {
    script.complete = true;
    terminated = true;
  }
  if (!terminated) throw ScriptError("missing 'done' or 'oops'", line_no);
  return script;
}

ReplayResult replay(const ProofScript& script, const ProofState& start,
                    const TacticEnv& env) {
  ReplayResult result{start, {}};
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const ScriptStep& step = script.steps[i];
    const std::string where =
        "step " + std::to_string(i + 1) + " (" + step.text + ")";
    auto spec = parse_tactic_text(step.text);
    if (!spec) throw ReplayError(where + ": not a tactic", i + 1);
    TacticStream cur = run_spec(*spec, result.state, env);
    std::size_t forced = 0;
    const TacticResult* r = nullptr;
    for (std::size_t k = 0;; ++k) {
      r = cur.head();
      ++forced;
      if (!r || k == step.back) break;
      cur = cur.tail();
    }
    result.forced.push_back(forced);
    if (!r) {
      throw ReplayError(step.back == 0
                            ? where + ": tactic failed"
                            : where + ": fewer than " +
                                  std::to_string(step.back + 1) + " results",
                        i + 1);
    }
    result.state = r->state;
  }
  if (script.complete && !result.state.solved())
    throw ReplayError("'done' but " + std::to_string(result.state.active().size()) +
                          " goal(s) remain",
                      0);
  return result;
}

}  // namespace psl
