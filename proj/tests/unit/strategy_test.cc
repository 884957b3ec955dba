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

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "doctest.h"
#include "psl/kernel.h"
#include "psl/strategy.h"

namespace psl {
namespace {

using K = Strategy::Kind;

std::string prelude_text() {
  std::ifstream in(PSL_SOURCE_DIR "/share/prelude.psl");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST_CASE("definitions parse into the surface tree") {
  auto f = parse_strategy_file("strategy S = Thens [Auto, IsSolved]");
  REQUIRE(f.defs.size() == 1);
  CHECK(f.defs[0].name == "S");
  CHECK(f.defs[0].body ==
        Strategy::make(K::kThens, {Strategy::make_atom(AtomKind::kAuto),
                                   Strategy::make_atom(AtomKind::kIsSolved)}));
}

TEST_CASE("every production has an accepted concrete syntax") {
  StrategyFile env = parse_strategy_file("strategy X = Simp");
  for (const char* s :
       {"Simp", "Clarsimp", "Fastforce", "Auto", "Induct", "Rule", "Erule",
        "Cases", "Coinduction", "Blast", "InductTac", "CaseTac",
        "Dynamic (Induct)", "Dynamic (CaseTac)", "IsSolved", "Defer",
        "IntroClasses", "Transfer", "Normalization", "Skip", "Fail", "Subgoal",
        "User \"assumption\"", "Hammer", "Nitpick", "Quickcheck",
        "Thens [Simp, X]", "Ors [Simp]", "Alts [Simp, Blast]",
        "Repeat (Simp)", "RepeatN (Hammer)", "POrs [Simp, Auto]",
        "PAlts [Simp, Auto]", "PThenOne [Simp, Auto]", "PThenAll [Simp, Auto]",
        "Cut 3 (Alts [Simp, Blast])"}) {
    CAPTURE(s);
    Strategy st = parse_strategy(s, env);
    CHECK(render(st) == s);
  }
}

TEST_CASE("malformed strategies are rejected with positions") {
  CHECK_THROWS_AS(parse_strategy_file("strategy S = PThenOne [Auto]"),
                  ParseError);
  CHECK_THROWS_AS(parse_strategy_file("strategy S = Thens []"), ParseError);
  CHECK_THROWS_AS(parse_strategy_file("strategy S = Cut 0 (Auto)"), ParseError);
  CHECK_THROWS_AS(parse_strategy_file("strategy S = Dynamic (Hammer)"),
                  ParseError);
  CHECK_THROWS_AS(parse_strategy_file("strategy S = Auto\nstrategy S = Simp"),
                  ParseError);
  try {
    parse_strategy_file("strategy A = Thens [Auto,\n  Later]\nstrategy Later = Simp");
    FAIL("forward reference accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("the default strategy file parses and round-trips") {
  auto f = parse_strategy_file(prelude_text());
  CHECK(f.defs.size() == 16);
  REQUIRE(f.find("Try_Hard"));
  auto again = parse_strategy_file(render(f));
  REQUIRE(again.defs.size() == f.defs.size());
  for (std::size_t i = 0; i < f.defs.size(); ++i) {
    CHECK(again.defs[i].name == f.defs[i].name);
    CHECK(again.defs[i].body == f.defs[i].body);
  }
  CHECK_NOTHROW(desugar(*f.find("Try_Hard"), f, {}));
}

TEST_CASE("desugaring right-nests and collapses") {
  StrategyFile env;
  auto d = [&](const char* s) {
    return render(*desugar(parse_strategy(s, env), env, {"assumption"}));
  };
  CHECK(d("Ors [Simp, Auto, Blast]") ==
        "Or(Atom Simp, Or(Atom Auto, Atom Blast))");
  CHECK(d("Thens [Simp]") == "Atom Simp");
  CHECK(d("Repeat (Ors [Simp, Auto])") == "Rep(Or(Atom Simp, Atom Auto))");
  CHECK(d("Thens [Erule, User \"assumption\"]") ==
        "Then(Atom Erule, Atom User \"assumption\")");
  CHECK_THROWS_AS(desugar(parse_strategy("User \"nope\"", env), env, {}),
                  DesugarError);
}

// ---- generated trees ----------------------------------------------------

Strategy random_strategy(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 9);
  auto sub = [&] { return random_strategy(rng, depth - 1); };
  auto some = [&](std::size_t lo) {
    std::vector<Strategy> v;
    std::size_t n = lo + rng() % 3;
    for (std::size_t i = 0; i < n; ++i) v.push_back(sub());
    return v;
  };
  switch (pick(rng)) {
    case 0: {
      auto k = static_cast<AtomKind>(rng() % 24);
      if (k == AtomKind::kUser) return Strategy::make_user("t0");
      return Strategy::make_atom(k);
    }
    case 1: return Strategy::make_dynamic(static_cast<AtomKind>(rng() % 12));
    case 2: return Strategy::make_user("t" + std::to_string(rng() % 5));
    case 3: return Strategy::make(K::kThens, some(1));
    case 4: return Strategy::make(K::kOrs, some(1));
    case 5: return Strategy::make(K::kAlts, some(1));
    case 6: return Strategy::make(rng() % 2 ? K::kPOrs : K::kPAlts, some(1));
    case 7: {
      std::vector<Strategy> two{sub(), sub()};
      return Strategy::make(rng() % 2 ? K::kPThenOne : K::kPThenAll,
                            std::move(two));
    }
    case 8: return Strategy::make(rng() % 2 ? K::kRepeat : K::kRepeatN, {sub()});
    default: return Strategy::make_cut(1 + static_cast<int>(rng() % 9), sub());
  }
}

std::size_t surface_size(const Strategy& s) {
  std::size_t n = 1;
  for (const auto& c : s.subs) n += surface_size(c);
  return n;
}

std::size_t core_size(const Core& c, bool& nary) {
  std::size_t n = 1;
  if ((c.kind == Core::Kind::kThen || c.kind == Core::Kind::kAlt ||
       c.kind == Core::Kind::kOr) &&
      c.subs.size() != 2)
    nary = true;
  for (const auto& s : c.subs) n += core_size(*s, nary);
  return n;
}

TEST_CASE("parse inverts render on generated trees") {
  std::mt19937 rng(7);
  StrategyFile env;
  for (int i = 0; i < 300; ++i) {
    Strategy s = random_strategy(rng, 4);
    std::string text = render(s);
    CAPTURE(text);
    CHECK(parse_strategy(text, env) == s);
  }
}

TEST_CASE("desugaring is size-linear and binary") {
  std::mt19937 rng(11);
  StrategyFile env;
  std::set<std::string> users{"t0", "t1", "t2", "t3", "t4"};
  for (int i = 0; i < 300; ++i) {
    Strategy s = random_strategy(rng, 4);
    bool nary = false;
    std::size_t n = core_size(*desugar(s, env, users), nary);
    CHECK_FALSE(nary);
    CHECK(n <= 2 * surface_size(s));
  }
}

}  // namespace
}  // namespace psl
