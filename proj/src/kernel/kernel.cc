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

#include "psl/kernel.h"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "kernel/type_unifier.h"

namespace psl {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

Term Term::var(std::string name) { return Term{Kind::kVar, std::move(name), {}}; }
Term Term::schematic(std::string name) {
  return Term{Kind::kSchematic, std::move(name), {}};
}
Term Term::ctor(std::string name, std::vector<Term> args) {
  return Term{Kind::kCtor, std::move(name), std::move(args)};
}
Term Term::app(std::string name, std::vector<Term> args) {
  return Term{Kind::kApp, std::move(name), std::move(args)};
}

bool Term::operator==(const Term& other) const {
  return kind == other.kind && name == other.name && args == other.args;
}

bool Term::operator<(const Term& other) const {
  return std::tie(kind, name, args) <
         std::tie(other.kind, other.name, other.args);
}

Formula Formula::truth() { return Formula{Kind::kTrue, {}, {}, {}}; }
Formula Formula::falsity() { return Formula{Kind::kFalse, {}, {}, {}}; }
Formula Formula::eq(Term lhs, Term rhs) {
  return Formula{Kind::kEq, {}, {std::move(lhs), std::move(rhs)}, {}};
}
Formula Formula::atom(std::string name, std::vector<Term> args) {
  return Formula{Kind::kAtom, std::move(name), std::move(args), {}};
}
Formula Formula::negate(Formula f) {
  return Formula{Kind::kNot, {}, {}, {std::move(f)}};
}
Formula Formula::conj(Formula a, Formula b) {
  return Formula{Kind::kAnd, {}, {}, {std::move(a), std::move(b)}};
}
Formula Formula::disj(Formula a, Formula b) {
  return Formula{Kind::kOr, {}, {}, {std::move(a), std::move(b)}};
}
Formula Formula::implies(Formula a, Formula b) {
  return Formula{Kind::kImplies, {}, {}, {std::move(a), std::move(b)}};
}

bool Formula::operator==(const Formula& other) const {
  return kind == other.kind && name == other.name && terms == other.terms &&
         subs == other.subs;
}

bool Formula::operator<(const Formula& other) const {
  return std::tie(kind, name, terms, subs) <
         std::tie(other.kind, other.name, other.terms, other.subs);
}

namespace {

void push_unique(std::vector<std::string>& out, const std::string& s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

void collect_symbols(const Term& t, std::set<std::string>& out) {
  if (t.is_ctor() || t.is_app()) out.insert(t.name);
  for (const auto& a : t.args) collect_symbols(a, out);
}

}  // namespace

void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.is_var()) {
    push_unique(out, t.name);
    return;
  }
  for (const auto& a : t.args) collect_vars(a, out);
}

void collect_vars(const Formula& f, std::vector<std::string>& out) {
  for (const auto& t : f.terms) collect_vars(t, out);
  for (const auto& s : f.subs) collect_vars(s, out);
}

std::vector<std::string> free_vars(const Goal& goal) {
  std::vector<std::string> out;
  for (const auto& h : goal.hyps) collect_vars(h, out);
  collect_vars(goal.concl, out);
  return out;
}

bool occurs(const Term& needle, const Term& hay) {
  if (needle == hay) return true;
  for (const auto& a : hay.args)
    if (occurs(needle, a)) return true;
  return false;
}

std::set<std::string> symbols(const Formula& f) {
  std::set<std::string> out;
  if (f.is(Formula::Kind::kAtom)) out.insert(f.name);
  for (const auto& t : f.terms) collect_symbols(t, out);
  for (const auto& s : f.subs) {
    auto inner = symbols(s);
    out.insert(inner.begin(), inner.end());
  }
  return out;
}

namespace {

void print_term(const Term& t, bool nested, std::ostream& os) {
  if (t.is_var()) {
    os << t.name;
    return;
  }
  if (t.is_schematic()) {
    os << '?' << t.name;
    return;
  }
  if (t.args.empty()) {
    os << t.name;
    return;
  }
  if (nested) os << '(';
  os << t.name;
  for (const auto& a : t.args) {
    os << ' ';
    print_term(a, true, os);
  }
  if (nested) os << ')';
}

// Precedence: --> 1, | 2, & 3, ~ 4, atomic 5.
int precedence(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::kImplies: return 1;
    case Formula::Kind::kOr: return 2;
    case Formula::Kind::kAnd: return 3;
    case Formula::Kind::kNot: return 4;
    default: return 5;
  }
}

void print_formula(const Formula& f, int context, std::ostream& os) {
  const int prec = precedence(f);
  const bool parens = prec < context;
  if (parens) os << '(';
  switch (f.kind) {
    case Formula::Kind::kTrue: os << "True"; break;
    case Formula::Kind::kFalse: os << "False"; break;
    case Formula::Kind::kEq:
      print_term(f.terms[0], false, os);
      os << " = ";
      print_term(f.terms[1], false, os);
      break;
    case Formula::Kind::kAtom:
      os << f.name;
      for (const auto& a : f.terms) {
        os << ' ';
        print_term(a, true, os);
      }
      break;
    case Formula::Kind::kNot:
      os << '~';
      print_formula(f.subs[0], 5, os);
      break;
    case Formula::Kind::kAnd:
      print_formula(f.subs[0], 4, os);
      os << " & ";
      print_formula(f.subs[1], 3, os);
      break;
    case Formula::Kind::kOr:
      print_formula(f.subs[0], 3, os);
      os << " | ";
      print_formula(f.subs[1], 2, os);
      break;
    case Formula::Kind::kImplies:
      print_formula(f.subs[0], 2, os);
      os << " --> ";
      print_formula(f.subs[1], 1, os);
      break;
  }
  if (parens) os << ')';
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print_term(t, false, os);
  return os.str();
}

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print_formula(f, 0, os);
  return os.str();
}

std::string to_string(const Goal& g) {
  std::ostringstream os;
  for (const auto& h : g.hyps) {
    // Premises bind tighter than ==>; parenthesize implications.
    if (h.is(Formula::Kind::kImplies))
      os << '(' << to_string(h) << ")";
    else
      os << to_string(h);
    os << " ==> ";
  }
  os << to_string(g.concl);
  return os.str();
}

const Datatype* Context::find_datatype(const std::string& name) const {
  for (const auto& dt : datatypes_)
    if (dt.name == name) return &dt;
  return nullptr;
}

const FunctionDef* Context::find_function(const std::string& name) const {
  for (const auto& fn : functions_)
    if (fn.name == name) return &fn;
  return nullptr;
}

const Lemma* Context::find_lemma(const std::string& label) const {
  for (const auto& l : lemmas_)
    if (l.label == label) return &l;
  return nullptr;
}

const InductRule* Context::find_induct_rule(const std::string& label) const {
  for (const auto& r : induct_rules_)
    if (r.label == label) return &r;
  return nullptr;
}

const Datatype* Context::datatype_of_ctor(const std::string& ctor) const {
  auto it = ctor_owner_.find(ctor);
  return it == ctor_owner_.end() ? nullptr : &datatypes_[it->second];
}

const Constructor* Context::find_ctor(const std::string& name) const {
  const Datatype* dt = datatype_of_ctor(name);
  if (!dt) return nullptr;
  for (const auto& c : dt->ctors)
    if (c.name == name) return &c;
  return nullptr;
}

bool Context::is_constant(const std::string& name) const {
  return ctor_owner_.count(name) || find_function(name) != nullptr;
}

void Context::add_datatype(Datatype dt) {
  for (const auto& c : dt.ctors) ctor_owner_[c.name] = datatypes_.size();
  datatypes_.push_back(std::move(dt));
}

void Context::add_function(FunctionDef fn) {
  for (const auto& eq : fn.equations) {
    simp_rules_.push_back(eq);
    definitions_.push_back(eq);
  }
  functions_.push_back(std::move(fn));
}

void Context::add_lemma(Lemma lemma) {
  if (lemma.has(LemmaAttr::kSimp)) {
    for (auto& r : rewrite_rules_of(lemma)) simp_rules_.push_back(std::move(r));
    for (auto& r : formula_rules_of(lemma)) simp_facts_.push_back(std::move(r));
  }
  lemmas_.push_back(std::move(lemma));
}

void Context::add_induct_rule(InductRule rule) {
  induct_rules_.push_back(std::move(rule));
}

namespace {

int infer_term(const Term& t, const Context& ctx, TypeUnifier& u,
               std::map<std::string, int>& vars) {
  if (t.is_var() || t.is_schematic()) {
    auto key = (t.is_schematic() ? "?" : "") + t.name;
    auto it = vars.find(key);
    if (it != vars.end()) return it->second;
    int v = u.fresh();
    vars.emplace(key, v);
    return v;
  }
  if (t.is_ctor()) {
    const Datatype* dt = ctx.datatype_of_ctor(t.name);
    const Constructor* c = ctx.find_ctor(t.name);
    if (!dt || !c || c->arg_types.size() != t.args.size())
      throw TypeMismatch("bad constructor " + t.name);
    for (std::size_t i = 0; i < t.args.size(); ++i)
      u.unify(infer_term(t.args[i], ctx, u, vars), u.named(c->arg_types[i]));
    return u.named(dt->name);
  }
  const FunctionDef* fn = ctx.find_function(t.name);
  if (!fn || fn->arg_types.size() != t.args.size())
    throw TypeMismatch("bad function " + t.name);
  for (std::size_t i = 0; i < t.args.size(); ++i)
    u.unify(infer_term(t.args[i], ctx, u, vars), u.named(fn->arg_types[i]));
  return u.named(fn->result_type);
}

void infer_formula(const Formula& f, const Context& ctx, TypeUnifier& u,
                   std::map<std::string, int>& vars,
                   std::map<std::string, std::vector<int>>& preds) {
  switch (f.kind) {
    case Formula::Kind::kEq:
      u.unify(infer_term(f.terms[0], ctx, u, vars),
              infer_term(f.terms[1], ctx, u, vars));
      return;
    case Formula::Kind::kAtom: {
      auto& sig = preds[f.name];
      while (sig.size() < f.terms.size()) sig.push_back(u.fresh());
      for (std::size_t i = 0; i < f.terms.size(); ++i)
        u.unify(infer_term(f.terms[i], ctx, u, vars), sig[i]);
      return;
    }
    default:
      for (const auto& s : f.subs) infer_formula(s, ctx, u, vars, preds);
  }
}

}  // namespace

std::map<std::string, std::string> Context::var_types(const Goal& goal) const {
  TypeUnifier u;
  std::map<std::string, int> vars;
  std::map<std::string, std::vector<int>> preds;
  std::map<std::string, std::string> out;
  try {
    for (const auto& h : goal.hyps) infer_formula(h, *this, u, vars, preds);
    infer_formula(goal.concl, *this, u, vars, preds);
  } catch (const TypeMismatch&) {
    return out;
  }
  for (const auto& [name, v] : vars) {
    if (name.starts_with("?")) continue;
    if (auto t = u.resolve(v)) out.emplace(name, *t);
  }
  return out;
}

bool Context::well_typed(const Goal& goal) const {
  TypeUnifier u;
  std::map<std::string, int> vars;
  std::map<std::string, std::vector<int>> preds;
  try {
    for (const auto& h : goal.hyps) infer_formula(h, *this, u, vars, preds);
    infer_formula(goal.concl, *this, u, vars, preds);
  } catch (const TypeMismatch&) {
    return false;
  }
  return true;
}

Term to_schematic(const Term& t) {
  if (t.is_var()) return Term::schematic(t.name);
  Term out = t;
  for (auto& a : out.args) a = to_schematic(a);
  return out;
}

Formula to_schematic(const Formula& f) {
  Formula out = f;
  for (auto& t : out.terms) t = to_schematic(t);
  for (auto& s : out.subs) s = to_schematic(s);
  return out;
}

namespace {

std::vector<std::string> schematic_vars(const Term& t) {
  std::vector<std::string> out;
  std::vector<const Term*> todo{&t};
  while (!todo.empty()) {
    const Term* cur = todo.back();
    todo.pop_back();
    if (cur->is_schematic()) push_unique(out, cur->name);
    for (const auto& a : cur->args) todo.push_back(&a);
  }
  return out;
}

bool usable_rule(const Term& lhs, const Term& rhs) {
  if (lhs.is_schematic() || lhs == rhs || occurs(lhs, rhs)) return false;
  auto lv = schematic_vars(lhs);
  for (const auto& v : schematic_vars(rhs))
    if (std::find(lv.begin(), lv.end(), v) == lv.end()) return false;
  return true;
}

}  // namespace

std::vector<RewriteRule> rewrite_rules_of(const Lemma& lemma) {
  if (!lemma.premises.empty() || !lemma.concl.is(Formula::Kind::kEq)) return {};
  Term lhs = to_schematic(lemma.concl.terms[0]);
  Term rhs = to_schematic(lemma.concl.terms[1]);
  if (!usable_rule(lhs, rhs)) return {};
  return {RewriteRule{lemma.label, std::move(lhs), std::move(rhs)}};
}

std::vector<FormulaRule> formula_rules_of(const Lemma& lemma) {
  if (!lemma.premises.empty()) return {};
  const Formula& c = lemma.concl;
  if (c.is(Formula::Kind::kAtom))
    return {FormulaRule{lemma.label, to_schematic(c), Formula::truth()}};
  if (c.is(Formula::Kind::kNot) && c.subs[0].is(Formula::Kind::kAtom))
    return {FormulaRule{lemma.label, to_schematic(c.subs[0]),
                        Formula::falsity()}};
  return {};
}

ProofState::ProofState(ContextPtr ctx, GoalList goals)
    : ctx_(std::move(ctx)),
      stack_(std::make_shared<const std::vector<GoalList>>(
          std::vector<GoalList>{std::move(goals)})) {}

ProofState::ProofState(ContextPtr ctx, std::vector<GoalList> stack)
    : ctx_(std::move(ctx)),
      stack_(std::make_shared<const std::vector<GoalList>>(std::move(stack))) {
  if (stack_->empty()) throw std::invalid_argument("empty focus stack");
}

ProofState ProofState::with_active(GoalList goals) const {
  std::vector<GoalList> next = *stack_;
  next.back() = std::move(goals);
  return ProofState(ctx_, std::move(next));
}

ProofState ProofState::push_focus(GoalList frame, GoalList rest) const {
  std::vector<GoalList> next = *stack_;
  next.back() = std::move(rest);
  next.push_back(std::move(frame));
  return ProofState(ctx_, std::move(next));
}

ProofState ProofState::pop_focus() const {
  std::vector<GoalList> next = *stack_;
  next.pop_back();
  return ProofState(ctx_, std::move(next));
}

bool ProofState::operator==(const ProofState& other) const {
  return stack_ == other.stack_ || *stack_ == *other.stack_;
}

std::string to_string(const ProofState& s) {
  std::ostringstream os;
  const auto& stack = s.stack();
  for (std::size_t i = 0; i < stack.size(); ++i) {
    os << "frame " << i << (i + 1 == stack.size() ? " (active)" : "") << ":\n";
    for (const auto& g : stack[i])
      os << "  " << g.label << ": " << to_string(g) << "\n";
  }
  return os.str();
}

}  // namespace psl
