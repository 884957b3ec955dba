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

// Innermost-leftmost exhaustive rewriting. Rules are tried in the order
// given; the first match at a position wins.

#ifndef PSL_REWRITE_H_
#define PSL_REWRITE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "psl/kernel.h"

namespace psl {

inline constexpr std::size_t kDefaultRewriteBudget = 10000;

using Substitution = std::map<std::string, Term>;

// Extends `subst` so that pattern instantiated equals `term`. Schematic
// variables in the pattern bind; everything else must match exactly.
bool match(const Term& pattern, const Term& term, Substitution& subst);
bool match(const Formula& pattern, const Formula& f, Substitution& subst);

// Replaces schematic variables bound in `subst`.
Term instantiate(const Term& t, const Substitution& subst);
Formula instantiate(const Formula& f, const Substitution& subst);

// Replaces plain variables by name.
Term substitute_vars(const Term& t, const std::map<std::string, Term>& map);
Formula substitute_vars(const Formula& f,
                        const std::map<std::string, Term>& map);

struct RuleSet {
  std::vector<RewriteRule> terms;
  std::vector<FormulaRule> facts;
};

template <typename X>
struct RewriteResult {
  X result;
  bool changed = false;
  std::set<std::string> used;  // labels of rules that fired
};

// Throws BudgetExhausted once more than `budget` rule applications happen.
RewriteResult<Term> rewrite_exhaustive(const Term& t, const RuleSet& rules,
                                       std::size_t budget = kDefaultRewriteBudget);

// Rewrites every term in the formula, applies fact rules, and simplifies
// the propositional structure: reflexive equations, constructor
// (in)equalities, and connectives over True/False.
RewriteResult<Formula> rewrite_exhaustive(
    const Formula& f, const RuleSet& rules,
    std::size_t budget = kDefaultRewriteBudget);

// Rules obtained from hypotheses: equations l = r oriented left to right
// (flipped when only the right side is a fixed variable and the left is
// ground). Rules from hypotheses carry an empty label.
std::vector<RewriteRule> hypothesis_rules(const std::vector<Formula>& hyps);

}  // namespace psl

#endif  // PSL_REWRITE_H_
