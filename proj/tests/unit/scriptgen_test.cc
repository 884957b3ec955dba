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

#include "doctest.h"
#include "psl/scriptgen.h"
#include "psl/theory.h"
#include "support/generators.h"

namespace psl {
namespace {

Theory load(const char* name) {
  return load_theory(std::string(PSL_SOURCE_DIR "/tests/data/") + name);
}

// Applies script texts in order, taking the given result of each, and
// records the trace the engine would have produced.
std::pair<TraceLog, ProofState> drive(
    const ProofState& start, const std::vector<std::pair<std::string, std::size_t>>& steps,
    const TacticEnv& env) {
  TraceLog log;
  ProofState s = start;
  for (const auto& [text, index] : steps) {
    auto rs = take(index + 1, run_spec(*parse_tactic_text(text), s, env));
    REQUIRE(rs.size() == index + 1);
    log = log.push(rs[index].entry);
    s = rs[index].state;
  }
  return {log, s};
}

TEST_CASE("emitted scripts have the expected shape") {
  Theory th = testing::probe_theory();
  TacticEnv env;
  ProofState s(th.context, GoalList{th.goals[2]});
  auto [log, final] = drive(s, {{"induct x", 0}, {"auto", 0}}, env);
  auto script = emit_script(log, final);
  CHECK(render(script) == "apply (induct x)\napply auto\ndone\n");
  CHECK(parse_script(render(script)) == script);
  auto r = replay(script, s, env);
  CHECK(r.state == final);
  CHECK(r.forced == std::vector<std::size_t>{1, 1});
}

TEST_CASE("non-first results render as back lines") {
  Theory th = load("fig2.thy");
  TacticEnv env;
  ProofState s(th.context, GoalList{*th.find_goal("fig2")});
  auto [log, final] = drive(s, {{"erule conjE", 1}, {"assumption", 0}}, env);
  auto script = emit_script(log, final);
  CHECK(render(script) == "apply (erule conjE)\nback\napply assumption\ndone\n");
  auto r = replay(parse_script(render(script)), s, env);
  CHECK(r.state.solved());
  CHECK(r.forced == std::vector<std::size_t>{2, 1});

  ProofScript no_back = script;
  no_back.steps[0].back = 0;
  try {
    replay(no_back, s, env);
    FAIL("expected a replay error");
  } catch (const ReplayError& e) {
    CHECK(e.step() == 2);
  }
  no_back.steps[0].back = 2;
  CHECK_THROWS_AS(replay(no_back, s, env), ReplayError);
}

TEST_CASE("incomplete scripts end with oops and the remaining goals") {
  Theory th = load("hamcheck.thy");
  TacticEnv env;
  ProofState s(th.context, th.goals);
  auto [log, final] = drive(
      s, {{"simp add: add_zero", 0}, {"defer", 0}, {"simp add: add_zero", 0}}, env);
  auto script = emit_script(log, final);
  CHECK_FALSE(script.complete);
  CHECK(script.remaining == std::vector<std::string>{"g2"});
  const std::string text = render(script);
  CHECK(text ==
        "apply (simp add: add_zero)\ndefer\napply (simp add: add_zero)\n"
        "oops\n(* remaining: g2 *)\n");
  CHECK(parse_script(text) == script);
  CHECK(replay(script, s, env).state == final);
  ProofScript claimed = script;
  claimed.complete = true;
  CHECK_THROWS_AS(replay(claimed, s, env), ReplayError);
}

TEST_CASE("focused subproofs close with done") {
  Theory th = testing::probe_theory();
  TacticEnv env;
  ProofState s(th.context, GoalList{th.goals[0], th.goals[1]});
  auto [log, final] =
      drive(s, {{"subgoal", 0}, {"simp", 0}, {"done", 0}, {"auto", 0}}, env);
  CHECK(final.solved());
  auto script = emit_script(log, final);
  const std::string text = render(script);
  CHECK(text == "subgoal\napply simp\ndone\napply auto\ndone\n");
  auto parsed = parse_script(text);
  CHECK(parsed == script);
  CHECK(replay(parsed, s, env).state.solved());
}

TEST_CASE("tampered scripts fail at the first bad step") {
  Theory th = testing::probe_theory();
  TacticEnv env;
  ProofState s(th.context, GoalList{th.goals[2]});
  auto script = parse_script("apply auto\napply (induct x)\ndone\n");
  try {
    replay(script, s, env);
    FAIL("expected a replay error");
  } catch (const ReplayError& e) {
    CHECK(e.step() == 1);
    CHECK(std::string(e.what()).find("auto") != std::string::npos);
  }
}

TEST_CASE("script syntax errors") {
  CHECK_THROWS_AS(parse_script("apply auto\n"), ScriptError);
  CHECK_THROWS_AS(parse_script("back\ndone\n"), ScriptError);
  CHECK_THROWS_AS(parse_script("apply (frob)\ndone\n"), ScriptError);
  CHECK_THROWS_AS(parse_script("apply (auto\ndone\n"), ScriptError);
  CHECK_THROWS_AS(parse_script("oops\napply auto\n"), ScriptError);
  CHECK_THROWS_AS(parse_script("(* open\ndone\n"), ScriptError);
  try {
    parse_script("apply auto\nfrobnicate\ndone\n");
  } catch (const ScriptError& e) {
    CHECK(e.line() == 2);
  }
  auto s = parse_script("(* header *)\n\napply   auto  \ndone\n");
  CHECK(s.steps == std::vector<ScriptStep>{{"auto", 0}});
  CHECK(s.complete);
}

}  // namespace
}  // namespace psl
