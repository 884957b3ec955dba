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

// Strategy language: surface syntax, definition files, and the
// binary-combinator core the interpreter runs.
//
//   strategy DInductAuto = Thens [Dynamic (Induct), Auto, IsSolved]
//   strategy Solve = Ors [Fastforce, Cut 2 (Alts [Simp, Blast]), User "x"]

#ifndef PSL_STRATEGY_H_
#define PSL_STRATEGY_H_

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psl {

enum class AtomKind {
  // Default tactics; these are the ones Dynamic accepts.
  kSimp,
  kClarsimp,
  kFastforce,
  kAuto,
  kInduct,
  kInductTac,
  kRule,
  kErule,
  kCases,
  kCaseTac,
  kCoinduction,
  kBlast,
  // Special.
  kIsSolved,
  kDefer,
  kIntroClasses,
  kTransfer,
  kNormalization,
  kSkip,
  kFail,
  kSubgoal,
  kUser,
  // Subtools.
  kHammer,
  kNitpick,
  kQuickcheck,
};

struct AtomDescriptor {
  AtomKind kind = AtomKind::kSkip;
  bool dynamic = false;
  std::string user_name;  // kUser only

  bool operator==(const AtomDescriptor&) const = default;
};

std::string_view atom_name(AtomKind kind);
std::optional<AtomKind> atom_kind(std::string_view name);
bool is_default_tactic(AtomKind kind);

// `Simp`, `Dynamic (Induct)`, `User "assumption"`.
std::string to_string(const AtomDescriptor& atom);

struct Strategy {
  enum class Kind {
    kAtom,
    kRef,  // a name bound by an earlier definition
    kThens,
    kOrs,
    kAlts,
    kPOrs,
    kPAlts,
    kPThenOne,
    kPThenAll,
    kRepeat,
    kRepeatN,
    kCut,
  };

  Kind kind = Kind::kAtom;
  AtomDescriptor atom;
  std::string ref;
  int cut = 0;
  std::vector<Strategy> subs;

  static Strategy make_atom(AtomKind k);
  static Strategy make_dynamic(AtomKind k);
  static Strategy make_user(std::string name);
  static Strategy make_ref(std::string name);
  static Strategy make(Kind k, std::vector<Strategy> subs);
  static Strategy make_cut(int n, Strategy s);

  bool operator==(const Strategy&) const = default;
};

std::string render(const Strategy& s);

struct StrategyDef {
  std::string name;
  Strategy body;
};

struct StrategyFile {
  std::vector<StrategyDef> defs;

  const Strategy* find(std::string_view name) const;
  // Appends the definitions of `other`; throws on duplicate names.
  void merge(const StrategyFile& other);
};

std::string render(const StrategyFile& file);

// References may only name definitions that come earlier in the file or in
// `base`. Throws ParseError.
StrategyFile parse_strategy_file(std::string_view text,
                                 const StrategyFile* base = nullptr);
Strategy parse_strategy(std::string_view text, const StrategyFile& env);
StrategyFile load_strategy_file(const std::string& path,
                                const StrategyFile* base = nullptr);

struct Core;
using CorePtr = std::shared_ptr<const Core>;

enum class CombKind { kCut, kPOrs, kPAlts, kPThenOne, kPThenAll };

struct Core {
  enum class Kind { kAtom, kSkip, kFail, kThen, kAlt, kOr, kRep, kRepN, kComb };

  Kind kind = Kind::kSkip;
  AtomDescriptor atom;
  CombKind comb = CombKind::kCut;
  int cut = 0;
  std::vector<CorePtr> subs;
};

CorePtr core_atom(AtomDescriptor atom);
CorePtr core_skip();
CorePtr core_fail();
CorePtr core_then(CorePtr a, CorePtr b);
CorePtr core_alt(CorePtr a, CorePtr b);
CorePtr core_or(CorePtr a, CorePtr b);
CorePtr core_rep(CorePtr s);
CorePtr core_repn(CorePtr s);
CorePtr core_comb(CombKind k, std::vector<CorePtr> subs, int cut = 0);

std::string render(const Core& c);

// Thrown for unresolved references and unknown User tactics.
class DesugarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Right-nests Thens/Ors/Alts into binary nodes, collapses singleton lists
// and expands references. Surface Skip and Fail stay atoms so that each use
// counts as one step of the search. Expanded definitions are shared.
CorePtr desugar(const Strategy& s, const StrategyFile& env,
                const std::set<std::string>& user_tactics);

}  // namespace psl

#endif  // PSL_STRATEGY_H_
