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

#include "psl/rewrite.h"

#include <algorithm>

namespace psl {

bool match(const Term& pattern, const Term& term, Substitution& subst) {
  if (pattern.is_schematic()) {
    auto it = subst.find(pattern.name);
    if (it != subst.end()) return it->second == term;
    subst.emplace(pattern.name, term);
    return true;
  }
  if (pattern.kind != term.kind || pattern.name != term.name ||
      pattern.args.size() != term.args.size())
    return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i)
    if (!match(pattern.args[i], term.args[i], subst)) return false;
  return true;
}

bool match(const Formula& pattern, const Formula& f, Substitution& subst) {
  if (pattern.kind != f.kind || pattern.name != f.name ||
      pattern.terms.size() != f.terms.size() ||
      pattern.subs.size() != f.subs.size())
    return false;
  for (std::size_t i = 0; i < pattern.terms.size(); ++i)
    if (!match(pattern.terms[i], f.terms[i], subst)) return false;
  for (std::size_t i = 0; i < pattern.subs.size(); ++i)
    if (!match(pattern.subs[i], f.subs[i], subst)) return false;
  return true;
}

Term instantiate(const Term& t, const Substitution& subst) {
  if (t.is_schematic()) {
    auto it = subst.find(t.name);
    return it == subst.end() ? t : it->second;
  }
  if (t.args.empty()) return t;
  Term out{t.kind, t.name, {}};
  out.args.reserve(t.args.size());
  for (const auto& a : t.args) out.args.push_back(instantiate(a, subst));
  return out;
}

Formula instantiate(const Formula& f, const Substitution& subst) {
  Formula out{f.kind, f.name, {}, {}};
  for (const auto& t : f.terms) out.terms.push_back(instantiate(t, subst));
  for (const auto& s : f.subs) out.subs.push_back(instantiate(s, subst));
  return out;
}

Term substitute_vars(const Term& t, const std::map<std::string, Term>& map) {
  if (t.is_var()) {
    auto it = map.find(t.name);
    return it == map.end() ? t : it->second;
  }
  if (t.args.empty()) return t;
  Term out{t.kind, t.name, {}};
  for (const auto& a : t.args) out.args.push_back(substitute_vars(a, map));
  return out;
}

Formula substitute_vars(const Formula& f,
                        const std::map<std::string, Term>& map) {
  Formula out{f.kind, f.name, {}, {}};
  for (const auto& t : f.terms) out.terms.push_back(substitute_vars(t, map));
  for (const auto& s : f.subs) out.subs.push_back(substitute_vars(s, map));
  return out;
}

namespace {

class Rewriter {
 public:
  Rewriter(const RuleSet& rules, std::size_t budget)
      : rules_(rules), budget_(budget) {}

  Term normalize(const Term& t) {
    Term cur = t;
    for (auto& a : cur.args) a = normalize(a);
    for (const auto& rule : rules_.terms) {
      Substitution subst;
      if (!match(rule.lhs, cur, subst)) continue;
      Term next = instantiate(rule.rhs, subst);
      // Permutative rules may map a term to itself.
      if (next == cur) continue;
      tick(rule.label);
      return normalize(next);
    }
    return cur;
  }

  Formula normalize(const Formula& f) {
    using K = Formula::Kind;
    Formula cur = f;
    for (auto& t : cur.terms) t = normalize(t);
    for (auto& s : cur.subs) s = normalize(s);
    if (cur.is(K::kAtom)) {
      for (const auto& rule : rules_.facts) {
        Substitution subst;
        if (!match(rule.lhs, cur, subst)) continue;
        tick(rule.label);
        return normalize(instantiate(rule.rhs, subst));
      }
    }
    return simplify(std::move(cur));
  }

  std::set<std::string> used;

 private:
  void tick(const std::string& label) {
    if (++steps_ > budget_)
      throw BudgetExhausted("rewrite step budget exhausted");
    if (!label.empty()) used.insert(label);
  }

  // Operands are already in normal form.
  Formula simplify(Formula f) {
    using K = Formula::Kind;
    switch (f.kind) {
      case K::kEq: {
        const Term& l = f.terms[0];
        const Term& r = f.terms[1];
        if (l == r) return Formula::truth();
        if (l.is_ctor() && r.is_ctor()) {
          if (l.name != r.name) return Formula::falsity();
          Formula acc = Formula::truth();
          for (std::size_t i = l.args.size(); i-- > 0;) {
            Formula e = simplify(Formula::eq(l.args[i], r.args[i]));
            acc = acc.is(K::kTrue) ? e : simplify(Formula::conj(e, acc));
          }
          return acc;
        }
        return f;
      }
      case K::kNot: {
        const Formula& a = f.subs[0];
        if (a.is(K::kTrue)) return Formula::falsity();
        if (a.is(K::kFalse)) return Formula::truth();
        if (a.is(K::kNot)) return a.subs[0];
        return f;
      }
      case K::kAnd: {
        const Formula& a = f.subs[0];
        const Formula& b = f.subs[1];
        if (a.is(K::kFalse) || b.is(K::kFalse)) return Formula::falsity();
        if (a.is(K::kTrue)) return b;
        if (b.is(K::kTrue)) return a;
        if (a == b) return a;
        return f;
      }
      case K::kOr: {
        const Formula& a = f.subs[0];
        const Formula& b = f.subs[1];
        if (a.is(K::kTrue) || b.is(K::kTrue)) return Formula::truth();
        if (a.is(K::kFalse)) return b;
        if (b.is(K::kFalse)) return a;
        if (a == b) return a;
        return f;
      }
      case K::kImplies: {
        const Formula& a = f.subs[0];
        const Formula& b = f.subs[1];
        if (a.is(K::kFalse) || b.is(K::kTrue) || a == b)
          return Formula::truth();
        if (a.is(K::kTrue)) return b;
        if (b.is(K::kFalse)) return simplify(Formula::negate(a));
        return f;
      }
      default:
        return f;
    }
  }

  const RuleSet& rules_;
  std::size_t budget_;
  std::size_t steps_ = 0;
};

}  // namespace

RewriteResult<Term> rewrite_exhaustive(const Term& t, const RuleSet& rules,
                                       std::size_t budget) {
  Rewriter rw(rules, budget);
  Term out = rw.normalize(t);
  bool changed = out != t;
  return {std::move(out), changed, std::move(rw.used)};
}

RewriteResult<Formula> rewrite_exhaustive(const Formula& f,
                                          const RuleSet& rules,
                                          std::size_t budget) {
  Rewriter rw(rules, budget);
  Formula out = rw.normalize(f);
  bool changed = out != f;
  return {std::move(out), changed, std::move(rw.used)};
}

namespace {

bool is_ground(const Term& t) {
  if (t.is_var() || t.is_schematic()) return false;
  return std::all_of(t.args.begin(), t.args.end(), is_ground);
}

bool schematic_subset(const Term& rhs, const Term& lhs) {
  if (rhs.is_schematic()) return occurs(rhs, lhs);
  for (const auto& a : rhs.args)
    if (!schematic_subset(a, lhs)) return false;
  return true;
}

}  // namespace

std::vector<RewriteRule> hypothesis_rules(const std::vector<Formula>& hyps) {
  std::vector<RewriteRule> out;
  for (const auto& h : hyps) {
    if (!h.is(Formula::Kind::kEq)) continue;
    Term lhs = h.terms[0];
    Term rhs = h.terms[1];
    if (rhs.is_var() && is_ground(lhs)) std::swap(lhs, rhs);
    if (lhs.is_schematic() || lhs == rhs || occurs(lhs, rhs)) continue;
    if (!schematic_subset(rhs, lhs)) continue;
    out.push_back(RewriteRule{"", std::move(lhs), std::move(rhs)});
  }
  return out;
}

}  // namespace psl
