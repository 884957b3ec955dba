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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "psl/tactics.h"
#include "psl/theory.h"

namespace psl {
namespace {

Theory load(const char* name) {
  return load_theory(std::string(PSL_SOURCE_DIR "/tests/data/") + name);
}

ProofState state_of(const Theory& th, const std::string& label) {
  return ProofState(th.context, GoalList{*th.find_goal(label)});
}

ProofState state_from(const Theory& th, const char* goal_text) {
  return ProofState(th.context, GoalList{parse_goal(goal_text, *th.context)});
}

std::vector<TacticResult> all(const TacticStream& s) { return take(1000, s); }

AtomDescriptor atom(AtomKind k, bool dynamic = false) {
  return AtomDescriptor{k, dynamic, {}};
}

TEST_CASE("erule yields one result per conjunction, in hypothesis order") {
  Theory th = load("fig2.thy");
  TacticEnv env;
  auto rs = all(eval_atom(atom(AtomKind::kErule), state_of(th, "fig2"), env));
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].entry.script_text == "erule conjE");
  CHECK(rs[0].entry.result_index == 0);
  CHECK(rs[1].entry.result_index == 1);
  CHECK(to_string(rs[0].state.active()[0]) == "y & z ==> w ==> x ==> z");
  CHECK(to_string(rs[1].state.active()[0]) == "w & x ==> y ==> z ==> z");
  AtomDescriptor assumption{AtomKind::kUser, false, "assumption"};
  CHECK(all(eval_atom(assumption, rs[0].state, env)).empty());
  auto done = all(eval_atom(assumption, rs[1].state, env));
  REQUIRE(done.size() == 1);
  CHECK(done[0].state.solved());
}

TEST_CASE("assertions and focus") {
  Theory th = parse_theory(R"(
datatype nat = Zero | Suc nat
goal a: x = x
goal b: Suc x = x
goal c: P
)");
  TacticEnv env;
  ProofState s(th.context, th.goals);
  CHECK(all(eval_atom(atom(AtomKind::kIsSolved), s, env)).empty());
  auto d = all(eval_atom(atom(AtomKind::kDefer), s, env));
  REQUIRE(d.size() == 1);
  std::vector<std::string> labels;
  for (const auto& g : d[0].state.active()) labels.push_back(g.label);
  CHECK(labels == std::vector<std::string>{"b", "c", "a"});
  CHECK(d[0].entry.script_text == "defer");

  auto f = all(eval_atom(atom(AtomKind::kSubgoal), s, env));
  REQUIRE(f.size() == 1);
  CHECK(f[0].state.depth() == 2);
  CHECK(f[0].state.active().size() == 1);
  auto simp = all(eval_atom(atom(AtomKind::kSimp), f[0].state, env));
  REQUIRE(simp.size() == 1);
  CHECK(simp[0].state.active().empty());
  CHECK(simp[0].state.stack()[0] == f[0].state.stack()[0]);
  auto popped = all(eval_atom(atom(AtomKind::kIsSolved), simp[0].state, env));
  REQUIRE(popped.size() == 1);
  CHECK(popped[0].entry.script_text == "done");
  CHECK(popped[0].state.depth() == 1);
  CHECK(popped[0].state.active().size() == 2);
}

TEST_CASE("quickcheck refutes false goals and passes true ones") {
  Theory th = load("hamcheck.thy");
  TacticEnv env;
  auto bad = state_from(th, "add x y = x");
  CHECK(all(eval_atom(atom(AtomKind::kQuickcheck), bad, env)).empty());
  auto msgs = env.diagnostics->messages();
  REQUIRE(msgs.size() == 1);
  CHECK(msgs[0].find("x = Zero, y = Suc Zero") != std::string::npos);
  auto ok = all(eval_atom(atom(AtomKind::kQuickcheck), state_of(th, "g2"), env));
  REQUIRE(ok.size() == 1);
  CHECK(ok[0].entry.script_text.empty());
}

TEST_CASE("hammer finds a minimal lemma set") {
  Theory th = load("hamcheck.thy");
  TacticEnv env;
  auto r = all(eval_atom(atom(AtomKind::kHammer), state_of(th, "g1"), env));
  REQUIRE(r.size() == 1);
  CHECK(r[0].entry.script_text == "simp add: add_zero");
  CHECK(r[0].state.active().empty());
  CHECK(all(eval_atom(atom(AtomKind::kHammer), state_of(th, "g2"), env)).empty());
}

TEST_CASE("induction then auto closes the reverse-append goal") {
  Theory th = load("rev.thy");
  TacticEnv env;
  auto ind = parse_tactic_text("induct xs");
  REQUIRE(ind);
  auto r = all(run_spec(*ind, state_of(th, "rev_append"), env));
  REQUIRE(r.size() == 1);
  CHECK(r[0].state.active().size() == 2);
  auto a = all(eval_atom(atom(AtomKind::kAuto), r[0].state, env));
  REQUIRE(a.size() == 1);
  CHECK(a[0].state.active().empty());
}

TEST_CASE("fastforce and blast are all-or-nothing on the first goal") {
  Theory th = parse_theory(R"(
goal p: (A --> B) & (B --> C) ==> A --> C
goal q: A | B ==> B | A
goal r: A ==> B
)");
  TacticEnv env;
  ProofState s(th.context, th.goals);
  for (auto k : {AtomKind::kFastforce, AtomKind::kBlast}) {
    auto r = all(eval_atom(atom(k), s, env));
    REQUIRE(r.size() == 1);
    CHECK(r[0].state.active().size() == 2);
    CHECK(r[0].state.active()[0] == th.goals[1]);
  }
  ProofState last(th.context, GoalList{th.goals[2]});
  CHECK(all(eval_atom(atom(AtomKind::kBlast), last, env)).empty());
  CHECK(all(eval_atom(atom(AtomKind::kFastforce), last, env)).empty());
}

TEST_CASE("unsupported atoms fail with a warning") {
  Theory th = load("fig2.thy");
  TacticEnv env;
  CHECK(all(eval_atom(atom(AtomKind::kTransfer), state_of(th, "fig2"), env)).empty());
  CHECK(all(eval_atom(atom(AtomKind::kTransfer), state_of(th, "fig2"), env)).empty());
  CHECK(env.diagnostics->messages().size() == 1);
}

TEST_CASE("script text round-trips") {
  for (const char* t :
       {"auto", "simp", "simp add: a b", "auto simp add: a", "clarsimp",
        "fastforce simp add: l", "blast", "assumption", "rule conjI",
        "erule conjE", "induct xs", "induct xs ys arbitrary: zs rule: list.induct",
        "induct_tac x rule: add.induct", "cases x", "case_tac y", "defer",
        "subgoal", "done"}) {
    auto spec = parse_tactic_text(t);
    REQUIRE_MESSAGE(spec, t);
    CHECK(render(*spec) == t);
  }
  for (const char* t : {"", "frobnicate", "simp add:", "induct", "rule",
                        "induct_tac x arbitrary: y", "auto add: x"})
    CHECK_FALSE(parse_tactic_text(t));
}

// ---- dynamic variants against an independent enumeration ----------------

// All (vars, arbitrary, rule) triples by brute force over bitmasks, sorted
// into the documented order.
std::vector<std::string> induct_oracle(const std::vector<std::string>& inductable,
                                       const std::vector<std::string>& free,
                                       const std::vector<std::string>& rules) {
  struct Row {
    std::vector<std::size_t> vars, arb;
    std::size_t rule;
    std::string text;
  };
  std::vector<Row> rows;
  const std::size_t n = inductable.size();
  for (unsigned vm = 1; vm < (1u << n); ++vm) {
    std::vector<std::size_t> vars;
    std::vector<std::string> vnames;
    for (std::size_t i = 0; i < n; ++i)
      if (vm >> i & 1) {
        vars.push_back(i);
        vnames.push_back(inductable[i]);
      }
    std::vector<std::string> rest;
    for (const auto& f : free)
      if (std::find(vnames.begin(), vnames.end(), f) == vnames.end())
        rest.push_back(f);
    for (unsigned am = 0; am < (1u << rest.size()); ++am) {
      std::vector<std::size_t> arb;
      std::string text = "induct";
      for (const auto& v : vnames) text += " " + v;
      std::string atext;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (am >> i & 1) {
          arb.push_back(i);
          atext += " " + rest[i];
        }
      if (!atext.empty()) text += " arbitrary:" + atext;
      for (std::size_t r = 0; r <= rules.size(); ++r)
        rows.push_back({vars, arb, r, r == 0 ? text : text + " rule: " + rules[r - 1]});
    }
  }
  auto key = [](const std::vector<std::size_t>& v) {
    return std::make_pair(v.size(), v);
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (key(a.vars) != key(b.vars)) return key(a.vars) < key(b.vars);
    if (key(a.arb) != key(b.arb)) return key(a.arb) < key(b.arb);
    return a.rule < b.rule;
  });
  std::vector<std::string> out;
  for (const auto& r : rows) out.push_back(r.text);
  return out;
}

std::vector<std::string> texts(const std::vector<Variant>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(render(v.spec));
  return out;
}

TEST_CASE("induct variants match the enumeration oracle") {
  Theory th = parse_theory(R"(
datatype nat = Zero | Suc nat
fun add Zero y = y
fun add (Suc x) y = Suc (add x y)
fun double Zero = Zero
fun double (Suc x) = Suc (Suc (double x))
)");
  TacticEnv env;
  SUBCASE("two variables, two applicable rules") {
    auto s = state_from(th, "double x = double y");
    auto vs = generate_dynamic(AtomKind::kInduct, s, env);
    CHECK(vs.size() == 15);
    CHECK(texts(vs) == induct_oracle({"x", "y"}, {"x", "y"},
                                     {"nat.induct", "double.induct"}) );
  }
  SUBCASE("three variables, three rules") {
    auto s = state_from(th, "add x (add y z) = add (add x y) z");
    auto vs = generate_dynamic(AtomKind::kInduct, s, env);
    CHECK(texts(vs) == induct_oracle({"x", "y", "z"}, {"x", "y", "z"},
                                     {"nat.induct", "add.induct"}));
  }
  SUBCASE("no free variables") {
    auto s = state_from(th, "add Zero Zero = Zero");
    CHECK(generate_dynamic(AtomKind::kInduct, s, env).empty());
  }
  SUBCASE("the cap restricts generalization") {
    env.config.variant_cap = 8;
    auto s = state_from(th, "add x (add y z) = add (add x y) z");
    auto vs = generate_dynamic(AtomKind::kInduct, s, env);
    for (const auto& v : vs) {
      auto n = v.spec.induct.arbitrary.size();
      CHECK((n == 0 || n + v.spec.induct.vars.size() == 3));
    }
    CHECK(vs.size() <= 8);
  }
}

TEST_CASE("dedup keeps exactly the pairwise-distinct first results") {
  Theory th = load("rev.thy");
  std::mt19937 rng(3);
  for (const char* goal :
       {"rev (append xs ys) = append (rev ys) (rev xs)",
        "append xs (append ys zs) = append (append xs ys) zs",
        "rev (rev xs) = xs", "append xs Nil = xs"}) {
    TacticEnv env;
    auto s = state_from(th, goal);
    auto vs = generate_dynamic(AtomKind::kInduct, s, env);
    std::shuffle(vs.begin(), vs.end(), rng);
    if (vs.size() > 12) vs.resize(12);
    // Oracle: apply every variant eagerly, filter by first result.
    std::vector<GoalList> seen;
    std::vector<std::string> expect;
    for (const auto& v : vs) {
      auto rs = all(run_spec(v.spec, s, env));
      if (rs.empty()) continue;
      GoalList key = rs[0].state.active();
      bool dup = false;
      for (const auto& k : seen) {
        bool same = k.size() == key.size();
        for (std::size_t i = 0; same && i < k.size(); ++i)
          same = k[i].hyps == key[i].hyps && k[i].concl == key[i].concl;
        dup = dup || same;
      }
      if (dup) continue;
      seen.push_back(key);
      for (const auto& r : rs) expect.push_back(r.entry.script_text);
    }
    std::vector<std::string> got;
    for (const auto& r : all(dedup_variants(vs, s, env)))
      got.push_back(r.entry.script_text);
    CHECK(got == expect);
  }
}

TEST_CASE("dedup is lazy") {
  Theory th = load("rev.thy");
  TacticEnv env;
  auto s = state_of(th, "rev_append");
  auto vs = generate_dynamic(AtomKind::kInduct, s, env);
  REQUIRE(vs.size() > 2);
  auto stream = dedup_variants(vs, s, env);
  REQUIRE(stream.head());
  CHECK(env.stats->variants_failed + env.stats->variants_duplicate == 0);
}

}  // namespace
}  // namespace psl
