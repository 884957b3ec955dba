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

// Ground evaluation and small-scope counterexample search.

#ifndef PSL_EVALUATE_H_
#define PSL_EVALUATE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psl/kernel.h"
#include "psl/rewrite.h"

namespace psl {

enum class Truth { kFalse, kTrue, kUnknown };

// Big-step evaluation with the defining equations. Anything that does not
// reduce to constructors (stuck partial functions, uninterpreted atoms,
// budget exhaustion) is kUnknown; connectives follow Kleene logic.
Truth evaluate_ground(const Formula& f, const std::map<std::string, Term>& env,
                      const Context& ctx,
                      std::size_t budget = kDefaultRewriteBudget);

// Height of a ground constructor term; nullary constructors have height 1.
int height(const Term& t);

// Constructor terms of the given datatype with height <= max_height,
// ordered by height, then by constructor declaration order.
std::vector<Term> ground_terms(const Context& ctx, const std::string& type,
                               int max_height);

struct Counterexample {
  std::string goal_label;
  std::vector<std::pair<std::string, Term>> assignment;
};

std::string to_string(const Counterexample& cex);

inline constexpr std::size_t kDefaultAssignmentCap = 200000;

// Enumerates assignments of the goal's free variables (first variable
// slowest) up to `bound`. A counterexample makes every hypothesis true and
// the conclusion false. Goals with variables of unknown type are never
// refuted.
std::optional<Counterexample> find_counterexample(
    const Goal& goal, const Context& ctx, int bound,
    std::size_t cap = kDefaultAssignmentCap);

}  // namespace psl

#endif  // PSL_EVALUATE_H_
