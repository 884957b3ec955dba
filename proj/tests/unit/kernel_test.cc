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
#include "psl/evaluate.h"
#include "psl/induction.h"
#include "psl/kernel.h"
#include "psl/rewrite.h"
#include "psl/theory.h"

namespace psl {
namespace {

constexpr const char* kNatAdd = R"(
datatype nat = Zero | Suc nat
datatype list = Nil | Cons nat list
fun add Zero y = y
fun add (Suc x) y = Suc (add x y)
lemma [simp] add_zero: add x Zero = x
goal add_comm: add x y = add y x
)";

Term nat(int n) {
  Term t = Term::ctor("Zero");
  while (n-- > 0) t = Term::ctor("Suc", {t});
  return t;
}

TEST_CASE("sample theory parses into one of each declaration") {
  Theory th = parse_theory(kNatAdd);
  CHECK(th.context->datatypes().size() == 2);
  CHECK(th.context->functions().size() == 1);
  CHECK(th.context->lemmas().size() == 1);
  REQUIRE(th.goals.size() == 1);
  CHECK(to_string(th.goals[0]) == "add x y = add y x");
  const FunctionDef* add = th.context->find_function("add");
  REQUIRE(add);
  CHECK(add->arg_types == std::vector<std::string>{"nat", "nat"});
  CHECK(add->result_type == "nat");
  CHECK(th.context->find_induct_rule("add.induct"));
  CHECK(th.context->find_induct_rule("nat.induct"));
}

TEST_CASE("theory errors carry positions") {
  CHECK_THROWS_AS(parse_theory("datatype nat = Zero | Suc nat\n"
                               "lemma a: x = x\nlemma a: y = y\n"),
                  ParseError);
  try {
    parse_theory("datatype nat = Zero | Suc nat\nfun f (Suc x y) = x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_theory("datatype nat = Zero | Suc nat\n"
                               "fun f x = Suc x\nfun f x y = x\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_theory("goal g: x = \n"), ParseError);
}

TEST_CASE("formula syntax round-trips through the printer") {
  Theory th = parse_theory(kNatAdd);
  for (const char* s : {"w & x ==> y & z ==> z", "~x = y | P x --> Q",
                        "(P --> Q) --> R", "add (Suc x) Zero = Suc x"}) {
    Goal g = parse_goal(s, *th.context);
    CHECK(to_string(g) == s);
  }
}

TEST_CASE("partial functions get no induction rule") {
  Theory th = parse_theory(R"(
datatype nat = Zero | Suc nat
fun pred (Suc x) = x
)");
  CHECK(th.context->find_induct_rule("pred.induct") == nullptr);
}

TEST_CASE("ground evaluation") {
  Theory th = parse_theory(kNatAdd);
  const Context& ctx = *th.context;
  Formula f = Formula::eq(Term::app("add", {nat(1), nat(1)}), nat(2));
  CHECK(evaluate_ground(f, {}, ctx) == Truth::kTrue);
  CHECK(evaluate_ground(Formula::falsity(), {}, ctx) == Truth::kFalse);
  CHECK(evaluate_ground(Formula::eq(Term::var("x"), Term::var("x")),
                        {{"x", nat(0)}}, ctx) == Truth::kTrue);
}

TEST_CASE("ground terms are ordered by height then constructor") {
  Theory th = parse_theory(kNatAdd);
  auto ts = ground_terms(*th.context, "nat", 3);
  REQUIRE(ts.size() == 3);
  CHECK(ts[2] == nat(2));
  // Nil; Cons Zero Nil; then height 3: Cons (Suc Zero) Nil,
  // Cons Zero (Cons Zero Nil), Cons (Suc Zero) (Cons Zero Nil)
  CHECK(ground_terms(*th.context, "list", 3).size() == 5);
}

TEST_CASE("counterexample search") {
  Theory th = parse_theory(kNatAdd);
  Goal g = parse_goal("add x y = x", *th.context);
  auto cex = find_counterexample(g, *th.context, 4);
  REQUIRE(cex);
  CHECK(to_string(*cex) == "x = Zero, y = Suc Zero");
  CHECK_FALSE(find_counterexample(th.goals[0], *th.context, 4));
}

TEST_CASE("rewriting reaches a normal form") {
  Theory th = parse_theory(kNatAdd);
  RuleSet rules{th.context->simp_rules(), th.context->simp_facts()};
  auto r = rewrite_exhaustive(parse_term("add (Suc x) Zero", *th.context), rules);
  CHECK(to_string(r.result) == "Suc x");
  CHECK(r.changed);
  CHECK(r.used == std::set<std::string>{"add.2", "add_zero"});
  auto again = rewrite_exhaustive(r.result, rules);
  CHECK_FALSE(again.changed);
}

TEST_CASE("structural induction on nat") {
  Theory th = parse_theory(kNatAdd);
  auto cases = induction_scheme(th.goals[0], {{"x"}, {}, {}}, *th.context);
  REQUIRE(cases);
  REQUIRE(cases->size() == 2);
  CHECK(to_string((*cases)[0]) == "add Zero y = add y Zero");
  CHECK(to_string((*cases)[1]) ==
        "add x y = add y x ==> add (Suc x) y = add y (Suc x)");
  auto gen = induction_scheme(th.goals[0], {{"x"}, {"y"}, {}}, *th.context);
  REQUIRE(gen);
  CHECK(to_string((*gen)[1]) ==
        "add x ?y = add ?y x ==> add (Suc x) y = add y (Suc x)");
  CHECK_FALSE(induction_scheme(th.goals[0], {{"z"}, {}, {}}, *th.context));
  CHECK_FALSE(
      induction_scheme(th.goals[0], {{"x"}, {"x"}, {}}, *th.context));
}

TEST_CASE("computation induction follows the equations") {
  Theory th = parse_theory(kNatAdd);
  auto cases = induction_scheme(th.goals[0],
                                {{"x", "y"}, {}, std::string("add.induct")},
                                *th.context);
  REQUIRE(cases);
  REQUIRE(cases->size() == 2);
  CHECK(to_string((*cases)[0]) == "add Zero y = add y Zero");
  CHECK(to_string((*cases)[1]) ==
        "add x1 y = add y x1 ==> add (Suc x1) y = add y (Suc x1)");
}

}  // namespace
}  // namespace psl
