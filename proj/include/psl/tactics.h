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

// Atomic tactics over the toy kernel. A tactic maps a proof state to a lazy
// stream of successor states; failure is the empty stream. Every result
// carries the script step that reproduces it.

#ifndef PSL_TACTICS_H_
#define PSL_TACTICS_H_

#include <atomic>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "psl/induction.h"
#include "psl/kernel.h"
#include "psl/lazy_stream.h"
#include "psl/rewrite.h"
#include "psl/strategy.h"
#include "psl/trace.h"

namespace psl {

struct TacticResult {
  TraceEntry entry;
  ProofState state;
};

using TacticStream = LazyStream<TacticResult>;
using Tactic = std::function<TacticStream(const ProofState&)>;

struct TacticConfig {
  std::size_t variant_cap = 1024;
  int fastforce_depth = 12;
  std::size_t fastforce_steps = 20000;
  std::size_t hammer_lemmas = 8;
  std::size_t relevance_top = 3;
  int quickcheck_bound = 4;
  int nitpick_bound = 6;
  std::size_t rewrite_budget = kDefaultRewriteBudget;
  std::size_t auto_rounds = 32;
};

struct TacticStats {
  std::atomic<std::size_t> atoms_applied{0};
  std::atomic<std::size_t> variants_generated{0};
  std::atomic<std::size_t> variants_failed{0};
  std::atomic<std::size_t> variants_duplicate{0};
};

// Warnings and counterexamples reported by tactics. These never enter the
// trace.
class Diagnostics {
 public:
  void warn_once(const std::string& key, const std::string& message);
  void note(const std::string& message);
  std::vector<std::string> messages() const;

 private:
  mutable std::mutex mutex_;
  std::set<std::string> seen_;
  std::vector<std::string> messages_;
};

// Tactics callable as `User "name"`. `assumption` is always present.
class UserTacticRegistry {
 public:
  UserTacticRegistry();
  void add(const std::string& name, Tactic tactic);
  const Tactic* find(const std::string& name) const;
  std::set<std::string> names() const;

 private:
  std::map<std::string, Tactic> tactics_;
};

struct TacticEnv {
  TacticConfig config;
  std::shared_ptr<TacticStats> stats = std::make_shared<TacticStats>();
  std::shared_ptr<Diagnostics> diagnostics = std::make_shared<Diagnostics>();
  std::shared_ptr<UserTacticRegistry> users =
      std::make_shared<UserTacticRegistry>();
};

// A script step in parsed form. Rendering and parsing are inverse; running
// a spec is deterministic, which is what makes replay search-free.
struct TacticSpec {
  enum class Op {
    kAuto,
    kSimp,
    kClarsimp,
    kFastforce,
    kBlast,
    kAssumption,
    kRule,
    kErule,
    kInduct,
    kInductTac,
    kCases,
    kCaseTac,
    kDefer,
    kSubgoal,
    kDone,
  };

  Op op = Op::kAuto;
  std::vector<std::string> add;  // simp add: / fastforce add: lemmas
  std::string name;              // rule, erule
  InductionSpec induct;          // induct, induct_tac; cases uses vars[0]

  bool operator==(const TacticSpec&) const = default;
};

// `auto`, `simp add: a b`, `induct xs arbitrary: ys rule: list.induct`,
// `erule conjE`, `defer`, `done`.
std::string render(const TacticSpec& spec);
// nullopt on text outside the replay grammar.
std::optional<TacticSpec> parse_tactic_text(const std::string& text);

// Results are numbered from 0 in stream order; entries carry render(spec).
TacticStream run_spec(const TacticSpec& spec, const ProofState& s,
                      const TacticEnv& env);

// The eval function of the interpreter: one atom on one state. Dynamic
// atoms expand to variants; unsupported atoms fail with a warning.
TacticStream eval_atom(const AtomDescriptor& atom, const ProofState& s,
                       const TacticEnv& env);

struct Variant {
  TacticSpec spec;
};

// Variants of a default tactic specialised to the first goal, in
// enumeration order.
std::vector<Variant> generate_dynamic(AtomKind kind, const ProofState& s,
                                      const TacticEnv& env);

// Runs variants lazily in order, dropping those that fail and those whose
// first result has the same active goals as an earlier kept variant, and
// concatenates the survivors' streams.
TacticStream dedup_variants(std::vector<Variant> variants, const ProofState& s,
                            const TacticEnv& env);

// Lemmas ranked by the number of symbols shared with the goal; ties keep
// declaration order. Lemmas sharing nothing are left out.
std::vector<const Lemma*> relevant_lemmas(const Goal& goal, const Context& ctx,
                                          std::size_t limit);

}  // namespace psl

#endif  // PSL_TACTICS_H_
