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

// Toy first-order logic backend: terms over declared datatypes and
// recursive functions, quantifier-free formulas with implicit universal
// quantification, goals, and the focus-stack proof state.

#ifndef PSL_KERNEL_H_
#define PSL_KERNEL_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace psl {

// Raised by any kernel operation that runs out of its step budget. Tactics
// map it to failure.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Term {
  // Schematic variables only occur in rewrite rules and generalized
  // induction hypotheses; they match any term. Plain variables are fixed.
  enum class Kind { kVar, kSchematic, kCtor, kApp };

  Kind kind = Kind::kVar;
  std::string name;
  std::vector<Term> args;

  static Term var(std::string name);
  static Term schematic(std::string name);
  static Term ctor(std::string name, std::vector<Term> args = {});
  static Term app(std::string name, std::vector<Term> args);

  bool is_var() const { return kind == Kind::kVar; }
  bool is_schematic() const { return kind == Kind::kSchematic; }
  bool is_ctor() const { return kind == Kind::kCtor; }
  bool is_app() const { return kind == Kind::kApp; }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  bool operator<(const Term& other) const;
};

struct Formula {
  enum class Kind { kTrue, kFalse, kEq, kAtom, kNot, kAnd, kOr, kImplies };

  Kind kind = Kind::kTrue;
  std::string name;          // predicate name of kAtom
  std::vector<Term> terms;   // kEq: two sides; kAtom: arguments
  std::vector<Formula> subs; // connective operands

  static Formula truth();
  static Formula falsity();
  static Formula eq(Term lhs, Term rhs);
  static Formula atom(std::string name, std::vector<Term> args = {});
  static Formula negate(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);

  bool is(Kind k) const { return kind == k; }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  bool operator<(const Formula& other) const;
};

struct Goal {
  std::vector<Formula> hyps;
  Formula concl;
  std::string label;

  bool operator==(const Goal& other) const = default;
};

using GoalList = std::vector<Goal>;

// Free (non-schematic) variables in order of first occurrence: hypotheses
// first, then the conclusion.
std::vector<std::string> free_vars(const Goal& goal);
void collect_vars(const Term& t, std::vector<std::string>& out);
void collect_vars(const Formula& f, std::vector<std::string>& out);
bool occurs(const Term& needle, const Term& hay);

// Constructor, function and predicate names.
std::set<std::string> symbols(const Formula& f);

std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::string to_string(const Goal& g);

struct Constructor {
  std::string name;
  std::vector<std::string> arg_types;
};

struct Datatype {
  std::string name;
  std::vector<Constructor> ctors;
};

// Oriented equation lhs -> rhs over schematic pattern variables.
struct RewriteRule {
  std::string label;
  Term lhs;
  Term rhs;
};

// Rewrites a formula pattern (with schematic term variables) to another
// formula; used for non-equational facts, e.g. `P x` -> True.
struct FormulaRule {
  std::string label;
  Formula lhs;
  Formula rhs;
};

struct FunctionDef {
  std::string name;
  std::vector<std::string> arg_types;
  std::string result_type;
  std::vector<RewriteRule> equations;  // labelled name.1, name.2, ...
};

enum class LemmaAttr { kSimp, kIntro, kElim };

struct Lemma {
  std::string label;
  std::vector<Formula> premises;
  Formula concl;
  std::set<LemmaAttr> attrs;

  bool has(LemmaAttr a) const { return attrs.count(a) != 0; }
};

// Induction rules are registered automatically: one structural rule per
// datatype (`nat.induct`) and one computation-induction rule per function
// whose equations are exhaustive (`add.induct`).
struct InductRule {
  enum class Kind { kDatatype, kFunction };
  std::string label;
  Kind kind;
  std::string target;  // datatype or function name
};

class Context {
 public:
  const std::vector<Datatype>& datatypes() const { return datatypes_; }
  const std::vector<FunctionDef>& functions() const { return functions_; }
  const std::vector<Lemma>& lemmas() const { return lemmas_; }
  const std::vector<InductRule>& induct_rules() const { return induct_rules_; }

  // Defining equations and simp lemmas in declaration order.
  const std::vector<RewriteRule>& simp_rules() const { return simp_rules_; }
  const std::vector<FormulaRule>& simp_facts() const { return simp_facts_; }
  // Defining equations only (ground evaluation).
  const std::vector<RewriteRule>& definitions() const { return definitions_; }

  const Datatype* find_datatype(const std::string& name) const;
  const FunctionDef* find_function(const std::string& name) const;
  const Lemma* find_lemma(const std::string& label) const;
  const InductRule* find_induct_rule(const std::string& label) const;
  // Datatype owning a constructor, or nullptr.
  const Datatype* datatype_of_ctor(const std::string& ctor) const;
  const Constructor* find_ctor(const std::string& name) const;

  bool is_constant(const std::string& name) const;

  // Types of the free variables of a goal, by inference against the
  // declared signatures. Variables whose type cannot be determined are
  // absent from the map.
  std::map<std::string, std::string> var_types(const Goal& goal) const;
  // False when the goal's terms cannot be typed against the signatures.
  bool well_typed(const Goal& goal) const;

  void add_datatype(Datatype dt);
  void add_function(FunctionDef fn);
  void add_lemma(Lemma lemma);
  void add_induct_rule(InductRule rule);

 private:
  std::vector<Datatype> datatypes_;
  std::vector<FunctionDef> functions_;
  std::vector<Lemma> lemmas_;
  std::vector<InductRule> induct_rules_;
  std::vector<RewriteRule> simp_rules_;
  std::vector<FormulaRule> simp_facts_;
  std::vector<RewriteRule> definitions_;
  std::map<std::string, std::size_t> ctor_owner_;
};

using ContextPtr = std::shared_ptr<const Context>;

// Rewrite rules derived from a lemma statement, with variables turned
// schematic. Empty when the lemma is not usable for rewriting.
std::vector<RewriteRule> rewrite_rules_of(const Lemma& lemma);
std::vector<FormulaRule> formula_rules_of(const Lemma& lemma);

Term to_schematic(const Term& t);
Formula to_schematic(const Formula& f);

// A stack of goal lists; the top frame holds the active goals. Frames below
// the top are never touched by tactics.
class ProofState {
 public:
  ProofState(ContextPtr ctx, GoalList goals);
  ProofState(ContextPtr ctx, std::vector<GoalList> stack);

  const Context& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }

  const std::vector<GoalList>& stack() const { return *stack_; }
  const GoalList& active() const { return stack_->back(); }
  std::size_t depth() const { return stack_->size(); }

  bool solved() const { return depth() == 1 && active().empty(); }

  ProofState with_active(GoalList goals) const;
  ProofState push_focus(GoalList frame, GoalList rest) const;
  // Precondition: depth() > 1.
  ProofState pop_focus() const;

  bool operator==(const ProofState& other) const;
  bool operator!=(const ProofState& other) const { return !(*this == other); }

 private:
  ContextPtr ctx_;
  std::shared_ptr<const std::vector<GoalList>> stack_;
};

std::string to_string(const ProofState& s);

}  // namespace psl

#endif  // PSL_KERNEL_H_
