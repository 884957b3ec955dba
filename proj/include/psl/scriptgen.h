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

// Proof scripts: the winning path of a search as a list of tactic steps,
// and their replay without search. Only the kernel and the tactics are
// needed to replay a script.

#ifndef PSL_SCRIPTGEN_H_
#define PSL_SCRIPTGEN_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "psl/kernel.h"
#include "psl/tactics.h"
#include "psl/trace.h"

namespace psl {

struct ScriptStep {
  std::string text;
  std::size_t back = 0;  // results to skip

  bool operator==(const ScriptStep&) const = default;
};

struct ProofScript {
  std::vector<ScriptStep> steps;
  bool complete = false;               // `done` rather than `oops`
  std::vector<std::string> remaining;  // goal labels left by an `oops` script

  bool operator==(const ProofScript&) const = default;
};

// One step per trace entry with script text; `done` iff `final` is solved.
ProofScript emit_script(const TraceLog& log, const ProofState& final);

// `apply auto`, `apply (induct x)`, bare `defer`/`subgoal`/`done`, one
// `back` line per skipped result, then `done` or `oops` with a comment
// naming the remaining goals.
std::string render(const ProofScript& script);

class ScriptError : public std::runtime_error {
 public:
  ScriptError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Throws ScriptError on text outside the script grammar, including tactic
// text outside the replay grammar.
ProofScript parse_script(const std::string& text);

class ReplayError : public std::runtime_error {
 public:
  ReplayError(const std::string& message, std::size_t step)
      : std::runtime_error(message), step_(step) {}
  // 1-based; 0 for errors about the terminator.
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

struct ReplayResult {
  ProofState state;
  // Stream elements forced by each step: back + 1 when it succeeds.
  std::vector<std::size_t> forced;
};

// Applies each step, taking result number `back`. Throws ReplayError when
// a step has no such result or a `done` script does not end solved.
ReplayResult replay(const ProofScript& script, const ProofState& start,
                    const TacticEnv& env);

}  // namespace psl

#endif  // PSL_SCRIPTGEN_H_
