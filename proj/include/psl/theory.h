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

// Reader for theory files:
//
//   datatype nat = Zero | Suc nat
//   fun add Zero y = y
//   fun add (Suc x) y = Suc (add x y)
//   lemma [simp] add_zero: add x Zero = x
//   goal add_comm: add x y = add y x
//
// Formulas use `=`, `~`, `&`, `|`, `-->` (loosest, right associative),
// `True` and `False`; `A ==> B ==> C` separates premises from the
// conclusion. An application whose head is neither a constructor nor a
// function is an uninterpreted predicate, so `P x` and plain `w` are atoms.

#ifndef PSL_THEORY_H_
#define PSL_THEORY_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "psl/kernel.h"

namespace psl {

struct Theory {
  std::shared_ptr<const Context> context;
  std::vector<Goal> goals;

  const Goal* find_goal(const std::string& label) const;
};

// Throws ParseError with the position of the offending token.
Theory parse_theory(std::string_view text);
Theory load_theory(const std::string& path);

// A goal statement `A ==> B ==> C` over an existing context.
Goal parse_goal(std::string_view text, const Context& ctx,
                const std::string& label = "goal");
Term parse_term(std::string_view text, const Context& ctx);

// True when every tuple of constructor terms is matched by some defining
// equation, checked by enumerating tuples one level deeper than the
// deepest pattern.
bool equations_exhaustive(const FunctionDef& fn, const Context& ctx);

}  // namespace psl

#endif  // PSL_THEORY_H_
