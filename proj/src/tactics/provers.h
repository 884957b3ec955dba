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

// Goal-level proof procedures behind the tactics. All of them are total:
// they either finish within their budgets or throw BudgetExhausted.

#ifndef PSL_TACTICS_PROVERS_H_
#define PSL_TACTICS_PROVERS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "psl/kernel.h"
#include "psl/rewrite.h"
#include "psl/tactics.h"

namespace psl::provers {

// Context simp set plus the rewrite rules of the named lemmas; nullopt if
// a name is unknown.
std::optional<RuleSet> simp_set(const Context& ctx,
                                const std::vector<std::string>& add);

struct SimpOutcome {
  enum class Kind { kUnchanged, kSolved, kChanged };
  Kind kind = Kind::kUnchanged;
  Goal goal;
};

// Simplifies hypotheses left to right (each with the ones before it as
// extra rewrite rules), then the conclusion with all of them.
SimpOutcome simp_goal(const Goal& goal, const RuleSet& rules,
                      std::size_t budget);

// Safe decomposition to a fixpoint; nullopt when nothing applies.
std::optional<GoalList> clarify(const Goal& goal);

// Alternating simp and clarify on one goal until neither changes it.
GoalList auto_goal(const Goal& goal, const RuleSet& rules,
                   const TacticConfig& config);

// Classical propositional sequent search; equations and atoms are opaque.
bool blast(const Goal& goal, std::size_t step_budget);

// Depth-bounded search over safe steps, rewriting, case splits on
// connectives and the intro/elim lemmas of the context.
bool fastforce(const Goal& goal, const RuleSet& rules, const Context& ctx,
               const TacticConfig& config);

bool is_builtin_rule(const std::string& name);
bool is_builtin_erule(const std::string& name);
extern const std::vector<std::string> kBuiltinRules;
extern const std::vector<std::string> kBuiltinErules;

// Replacement goals for resolving the goal with an intro rule.
std::optional<GoalList> apply_rule(const Goal& goal, const std::string& name,
                                   const Context& ctx);

// One replacement per hypothesis the elimination rule applies to, in
// hypothesis order.
std::vector<GoalList> apply_erule(const Goal& goal, const std::string& name,
                                  const Context& ctx);

bool same_goals(const GoalList& a, const GoalList& b);

}  // namespace psl::provers

#endif  // PSL_TACTICS_PROVERS_H_
