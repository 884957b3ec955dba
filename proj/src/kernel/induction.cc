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

#include "psl/induction.h"

#include <algorithm>
#include <map>
#include <set>

#include "psl/rewrite.h"

namespace psl {

std::string to_string(const InductionSpec& spec) {
  std::string out = "induct";
  for (const auto& v : spec.vars) out += " " + v;
  if (!spec.arbitrary.empty()) {
    out += " arbitrary:";
    for (const auto& v : spec.arbitrary) out += " " + v;
  }
  if (spec.rule) out += " rule: " + *spec.rule;
  return out;
}

namespace {

class NameSupply {
 public:
  explicit NameSupply(const Goal& goal) {
    for (const auto& v : free_vars(goal)) used_.insert(v);
    std::vector<const Term*> todo;
    auto add_schematics = [&](const Formula& f, auto&& self) -> void {
      for (const auto& t : f.terms) todo.push_back(&t);
      for (const auto& s : f.subs) self(s, self);
    };
    for (const auto& h : goal.hyps) add_schematics(h, add_schematics);
    add_schematics(goal.concl, add_schematics);
    while (!todo.empty()) {
      const Term* t = todo.back();
      todo.pop_back();
      if (t->is_schematic()) used_.insert(t->name);
      for (const auto& a : t->args) todo.push_back(&a);
    }
  }

  std::string fresh(const std::string& base) {
    std::string name = base;
    for (int i = 1; used_.count(name); ++i) name = base + std::to_string(i);
    used_.insert(name);
    return name;
  }

 private:
  std::set<std::string> used_;
};

Formula conjunction(const std::vector<Formula>& fs) {
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;)
    acc = Formula::conj(fs[i], std::move(acc));
  return acc;
}

// The induction predicate instantiated by `map`, with generalized
// variables made schematic.
Formula hypothesis_for(const Goal& goal, std::map<std::string, Term> map,
                       const std::vector<std::string>& arbitrary) {
  for (const auto& a : arbitrary) map[a] = Term::schematic(a);
  Formula body = goal.hyps.empty()
                     ? goal.concl
                     : Formula::implies(conjunction(goal.hyps), goal.concl);
  return substitute_vars(body, map);
}

Goal instantiate_goal(const Goal& goal, const std::map<std::string, Term>& map,
                      std::string label) {
  Goal out;
  for (const auto& h : goal.hyps) out.hyps.push_back(substitute_vars(h, map));
  out.concl = substitute_vars(goal.concl, map);
  out.label = std::move(label);
  return out;
}

std::string base_name(const std::string& type) {
  return type.empty() ? std::string("a") : std::string(1, type[0]);
}

std::optional<GoalList> structural(const Goal& goal, const std::string& var,
                                   const std::vector<std::string>& arbitrary,
                                   bool with_hypotheses, const Context& ctx) {
  auto types = ctx.var_types(goal);
  auto it = types.find(var);
  if (it == types.end()) return std::nullopt;
  const Datatype* dt = ctx.find_datatype(it->second);
  if (!dt) return std::nullopt;

  GoalList out;
  NameSupply names(goal);
  for (std::size_t i = 0; i < dt->ctors.size(); ++i) {
    const Constructor& c = dt->ctors[i];
    std::vector<Term> args;
    std::vector<std::string> recursive;
    for (const auto& ty : c.arg_types) {
      std::string name;
      if (ty == dt->name && recursive.empty())
        name = var;
      else
        name = names.fresh(ty == dt->name ? var : base_name(ty));
      if (ty == dt->name) recursive.push_back(name);
      args.push_back(Term::var(name));
    }
    std::map<std::string, Term> inst{{var, Term::ctor(c.name, args)}};
    Goal sub = instantiate_goal(goal, inst, goal.label + "." + std::to_string(i + 1));
    if (with_hypotheses) {
      for (const auto& r : recursive)
        sub.hyps.push_back(hypothesis_for(goal, {{var, Term::var(r)}}, arbitrary));
    }
    out.push_back(std::move(sub));
  }
  return out;
}

void collect_calls(const Term& t, const std::string& fn,
                   std::vector<const Term*>& out) {
  if (t.is_app() && t.name == fn) out.push_back(&t);
  for (const auto& a : t.args) collect_calls(a, fn, out);
}

std::optional<GoalList> by_function_rule(const Goal& goal,
                                         const InductionSpec& spec,
                                         const FunctionDef& fn,
                                         const Context& ctx) {
  if (spec.vars.size() != fn.arg_types.size()) return std::nullopt;
  auto types = ctx.var_types(goal);
  for (std::size_t j = 0; j < spec.vars.size(); ++j) {
    auto it = types.find(spec.vars[j]);
    if (it == types.end() || it->second != fn.arg_types[j]) return std::nullopt;
  }
  GoalList out;
  NameSupply names(goal);
  for (std::size_t i = 0; i < fn.equations.size(); ++i) {
    const RewriteRule& eq = fn.equations[i];
    Substitution patmap;
    for (std::size_t j = 0; j < eq.lhs.args.size(); ++j) {
      const Term& p = eq.lhs.args[j];
      if (p.is_schematic()) {
        patmap[p.name] = Term::var(spec.vars[j]);
        continue;
      }
      std::vector<const Term*> todo{&p};
      while (!todo.empty()) {
        const Term* t = todo.back();
        todo.pop_back();
        if (t->is_schematic() && !patmap.count(t->name))
          patmap[t->name] = Term::var(names.fresh(t->name));
        for (const auto& a : t->args) todo.push_back(&a);
      }
    }
    std::map<std::string, Term> inst;
    for (std::size_t j = 0; j < spec.vars.size(); ++j)
      inst[spec.vars[j]] = instantiate(eq.lhs.args[j], patmap);
    Goal sub = instantiate_goal(goal, inst, goal.label + "." + std::to_string(i + 1));
    std::vector<const Term*> calls;
    collect_calls(eq.rhs, fn.name, calls);
    for (const Term* call : calls) {
      std::map<std::string, Term> ih;
      for (std::size_t j = 0; j < spec.vars.size(); ++j)
        ih[spec.vars[j]] = instantiate(call->args[j], patmap);
      sub.hyps.push_back(hypothesis_for(goal, ih, spec.arbitrary));
    }
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace

std::vector<std::string> inductable_vars(const Goal& goal, const Context& ctx) {
  auto types = ctx.var_types(goal);
  std::vector<std::string> out;
  for (const auto& v : free_vars(goal)) {
    auto it = types.find(v);
    if (it != types.end() && ctx.find_datatype(it->second)) out.push_back(v);
  }
  return out;
}

std::vector<std::string> applicable_induct_rules(const Goal& goal,
                                                 const Context& ctx) {
  auto types = ctx.var_types(goal);
  std::set<std::string> var_types;
  for (const auto& [v, t] : types) var_types.insert(t);
  std::set<std::string> syms = symbols(goal.concl);
  for (const auto& h : goal.hyps) {
    auto s = symbols(h);
    syms.insert(s.begin(), s.end());
  }
  std::vector<std::string> out;
  for (const auto& rule : ctx.induct_rules()) {
    bool ok = rule.kind == InductRule::Kind::kDatatype
                  ? var_types.count(rule.target) != 0
                  : syms.count(rule.target) != 0;
    if (ok) out.push_back(rule.label);
  }
  return out;
}

std::optional<GoalList> induction_scheme(const Goal& goal,
                                         const InductionSpec& spec,
                                         const Context& ctx) {
  if (spec.vars.empty()) return std::nullopt;
  auto fv = free_vars(goal);
  auto is_free = [&](const std::string& v) {
    return std::find(fv.begin(), fv.end(), v) != fv.end();
  };
  for (const auto& v : spec.vars) {
    if (!is_free(v)) return std::nullopt;
    if (std::find(spec.arbitrary.begin(), spec.arbitrary.end(), v) !=
        spec.arbitrary.end())
      return std::nullopt;
  }
  for (const auto& a : spec.arbitrary)
    if (!is_free(a)) return std::nullopt;

  if (spec.rule) {
    const InductRule* rule = ctx.find_induct_rule(*spec.rule);
    if (!rule) return std::nullopt;
    if (rule->kind == InductRule::Kind::kFunction) {
      const FunctionDef* fn = ctx.find_function(rule->target);
      if (!fn) return std::nullopt;
      return by_function_rule(goal, spec, *fn, ctx);
    }
    auto types = ctx.var_types(goal);
    auto it = types.find(spec.vars.front());
    if (it == types.end() || it->second != rule->target) return std::nullopt;
  }

  GoalList current{goal};
  for (const auto& var : spec.vars) {
    GoalList next;
    for (const auto& g : current) {
      auto sub = structural(g, var, spec.arbitrary, true, ctx);
      if (!sub) return std::nullopt;
      next.insert(next.end(), sub->begin(), sub->end());
    }
    current = std::move(next);
  }
  return current;
}

std::optional<GoalList> case_split(const Goal& goal, const std::string& var,
                                   const Context& ctx) {
  auto fv = free_vars(goal);
  if (std::find(fv.begin(), fv.end(), var) == fv.end()) return std::nullopt;
  return structural(goal, var, {}, false, ctx);
}

}  // namespace psl
