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

#ifndef PSL_INDUCTION_H_
#define PSL_INDUCTION_H_

#include <optional>
#include <string>
#include <vector>

#include "psl/kernel.h"

namespace psl {

struct InductionSpec {
  std::vector<std::string> vars;
  std::vector<std::string> arbitrary;
  std::optional<std::string> rule;

  bool operator==(const InductionSpec&) const = default;
};

// Renders as the replay syntax: `induct xs arbitrary: ys rule: list.induct`.
std::string to_string(const InductionSpec& spec);

// Subgoals of an induction, or nullopt when the variables are not
// inductable or the rule does not apply. Without a rule, the first variable
// gets structural induction over its datatype and further variables are
// handled by nested induction inside each case. Recursive constructor
// arguments yield hypotheses; generalized (`arbitrary`) variables become
// schematic inside those hypotheses. A goal with premises is inducted as
// the implication premises --> conclusion.
std::optional<GoalList> induction_scheme(const Goal& goal,
                                         const InductionSpec& spec,
                                         const Context& ctx);

// One subgoal per constructor of the variable's datatype.
std::optional<GoalList> case_split(const Goal& goal, const std::string& var,
                                   const Context& ctx);

// Free variables of datatype type, in occurrence order.
std::vector<std::string> inductable_vars(const Goal& goal, const Context& ctx);

// Induction rules worth trying on the goal: a datatype rule if some free
// variable has that type, a function rule if the function occurs.
std::vector<std::string> applicable_induct_rules(const Goal& goal,
                                                 const Context& ctx);

}  // namespace psl

#endif  // PSL_INDUCTION_H_
