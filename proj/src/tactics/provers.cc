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

#include "tactics/provers.h"

#include <algorithm>
#include <deque>

namespace psl::provers {

using K = Formula::Kind;

const std::vector<std::string> kBuiltinRules = {"conjI",  "impI",   "notI",
                                                "disjI1", "disjI2", "refl"};
const std::vector<std::string> kBuiltinErules = {"conjE", "disjE", "impE",
                                                 "notE"};

bool is_builtin_rule(const std::string& name) {
  return std::find(kBuiltinRules.begin(), kBuiltinRules.end(), name) !=
         kBuiltinRules.end();
}

bool is_builtin_erule(const std::string& name) {
  return std::find(kBuiltinErules.begin(), kBuiltinErules.end(), name) !=
         kBuiltinErules.end();
}

namespace {

bool contains(const std::vector<Formula>& fs, const Formula& f) {
  return std::find(fs.begin(), fs.end(), f) != fs.end();
}

Goal with(const Goal& g, std::vector<Formula> hyps, Formula concl) {
  return Goal{std::move(hyps), std::move(concl), g.label};
}

std::vector<Formula> without(const std::vector<Formula>& fs, std::size_t i) {
  std::vector<Formula> out = fs;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

std::vector<Formula> plus(std::vector<Formula> fs, Formula f) {
  fs.push_back(std::move(f));
  return fs;
}

bool has_schematic(const Term& t) {
  if (t.is_schematic()) return true;
  return std::any_of(t.args.begin(), t.args.end(), has_schematic);
}

bool has_schematic(const Formula& f) {
  return std::any_of(f.terms.begin(), f.terms.end(),
                     [](const Term& t) { return has_schematic(t); }) ||
         std::any_of(f.subs.begin(), f.subs.end(),
                     [](const Formula& s) { return has_schematic(s); });
}

void append_fact_rules(const std::vector<Formula>& hyps, RuleSet& rules) {
  for (const auto& h : hyps) {
    if (h.is(K::kAtom))
      rules.facts.push_back({"", h, Formula::truth()});
    else if (h.is(K::kNot) && h.subs[0].is(K::kAtom))
      rules.facts.push_back({"", h.subs[0], Formula::falsity()});
  }
}

}  // namespace

std::optional<RuleSet> simp_set(const Context& ctx,
                                const std::vector<std::string>& add) {
  RuleSet rules{ctx.simp_rules(), ctx.simp_facts()};
  for (const auto& name : add) {
    const Lemma* lem = ctx.find_lemma(name);
    if (!lem) return std::nullopt;
    for (auto& r : rewrite_rules_of(*lem)) rules.terms.push_back(std::move(r));
    for (auto& r : formula_rules_of(*lem)) rules.facts.push_back(std::move(r));
  }
  return rules;
}

SimpOutcome simp_goal(const Goal& goal, const RuleSet& rules,
                      std::size_t budget) {
  std::vector<Formula> hyps;
  for (const auto& h : goal.hyps) {
    RuleSet local = rules;
    for (auto& r : hypothesis_rules(hyps)) local.terms.push_back(std::move(r));
    append_fact_rules(hyps, local);
    Formula s = rewrite_exhaustive(h, local, budget).result;
    if (s.is(K::kFalse)) return {SimpOutcome::Kind::kSolved, {}};
    if (s.is(K::kTrue) || contains(hyps, s)) continue;
    hyps.push_back(std::move(s));
  }
  RuleSet local = rules;
  for (auto& r : hypothesis_rules(hyps)) local.terms.push_back(std::move(r));
  append_fact_rules(hyps, local);
  Formula concl = rewrite_exhaustive(goal.concl, local, budget).result;
  if (concl.is(K::kTrue) || contains(hyps, concl))
    return {SimpOutcome::Kind::kSolved, {}};
  Goal out = with(goal, std::move(hyps), std::move(concl));
  if (out == goal) return {SimpOutcome::Kind::kUnchanged, goal};
  return {SimpOutcome::Kind::kChanged, std::move(out)};
}

namespace {

bool trivially_true(const Goal& g) {
  if (g.concl.is(K::kTrue) || contains(g.hyps, Formula::falsity()) ||
      contains(g.hyps, g.concl))
    return true;
  if (g.concl.is(K::kEq) && g.concl.terms[0] == g.concl.terms[1]) return true;
  for (const auto& h : g.hyps)
    if (h.is(K::kNot) && contains(g.hyps, h.subs[0])) return true;
  return false;
}

// One safe step, or nullopt.
std::optional<GoalList> safe_step(const Goal& g) {
  if (trivially_true(g)) return GoalList{};
  const Formula& c = g.concl;
  if (c.is(K::kAnd))
    return GoalList{with(g, g.hyps, c.subs[0]), with(g, g.hyps, c.subs[1])};
  if (c.is(K::kImplies))
    return GoalList{with(g, plus(g.hyps, c.subs[0]), c.subs[1])};
  if (c.is(K::kNot))
    return GoalList{with(g, plus(g.hyps, c.subs[0]), Formula::falsity())};
  for (std::size_t i = 0; i < g.hyps.size(); ++i) {
    const Formula& h = g.hyps[i];
    if (h.is(K::kTrue) || contains(without(g.hyps, i), h) ) {
      return GoalList{with(g, without(g.hyps, i), c)};
    }
    if (h.is(K::kAnd)) {
      auto hs = g.hyps;
      hs[i] = h.subs[0];
      hs.insert(hs.begin() + static_cast<std::ptrdiff_t>(i) + 1, h.subs[1]);
      return GoalList{with(g, std::move(hs), c)};
    }
    if (h.is(K::kOr)) {
      auto a = g.hyps;
      auto b = g.hyps;
      a[i] = h.subs[0];
      b[i] = h.subs[1];
      return GoalList{with(g, std::move(a), c), with(g, std::move(b), c)};
    }
    if (h.is(K::kEq)) {
      // Substitute a variable defined by the hypothesis.
      for (int side = 0; side < 2; ++side) {
        const Term& v = h.terms[side];
        const Term& t = h.terms[1 - side];
        if (!v.is_var() || occurs(v, t)) continue;
        std::map<std::string, Term> sub{{v.name, t}};
        std::vector<Formula> hs;
        for (std::size_t j = 0; j < g.hyps.size(); ++j)
          if (j != i) hs.push_back(substitute_vars(g.hyps[j], sub));
        return GoalList{with(g, std::move(hs), substitute_vars(c, sub))};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<GoalList> clarify(const Goal& goal) {
  GoalList done;
  std::deque<Goal> todo{goal};
  bool changed = false;
  std::size_t steps = 0;
  while (!todo.empty()) {
    Goal g = std::move(todo.front());
    todo.pop_front();
    auto next = safe_step(g);
    if (!next) {
      done.push_back(std::move(g));
      continue;
    }
    if (++steps > 10000) throw BudgetExhausted("clarify step budget exhausted");
    changed = true;
    for (auto it = next->rbegin(); it != next->rend(); ++it)
      todo.push_front(std::move(*it));
  }
  if (!changed) return std::nullopt;
  return done;
}

GoalList auto_goal(const Goal& goal, const RuleSet& rules,
                   const TacticConfig& config) {
  GoalList out;
  std::deque<std::pair<Goal, std::size_t>> todo{{goal, 0}};
  while (!todo.empty()) {
    auto [g, round] = std::move(todo.front());
    todo.pop_front();
    if (round >= config.auto_rounds) {
      out.push_back(std::move(g));
      continue;
    }
    SimpOutcome s = simp_goal(g, rules, config.rewrite_budget);
    if (s.kind == SimpOutcome::Kind::kSolved) continue;
    bool simp_changed = s.kind == SimpOutcome::Kind::kChanged;
    Goal cur = simp_changed ? std::move(s.goal) : std::move(g);
    auto parts = clarify(cur);
    if (!parts) {
      if (simp_changed)
        todo.push_front({std::move(cur), round + 1});
      else
        out.push_back(std::move(cur));
      continue;
    }
    for (auto it = parts->rbegin(); it != parts->rend(); ++it)
      todo.push_front({std::move(*it), round + 1});
  }
  return out;
}

// ---- blast ---------------------------------------------------------------

namespace {

bool atomic(const Formula& f) {
  return f.is(K::kEq) || f.is(K::kAtom) || f.is(K::kTrue) || f.is(K::kFalse);
}

bool lk(std::vector<Formula> left, std::vector<Formula> right,
        std::size_t& steps, std::size_t budget) {
  if (++steps > budget) throw BudgetExhausted("blast step budget exhausted");
  for (const auto& f : left) {
    if (f.is(K::kFalse)) return true;
    if (contains(right, f)) return true;
  }
  for (const auto& f : right) {
    if (f.is(K::kTrue)) return true;
    if (f.is(K::kEq) && f.terms[0] == f.terms[1]) return true;
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    const Formula f = left[i];
    if (atomic(f)) continue;
    auto rest = without(left, i);
    switch (f.kind) {
      case K::kAnd:
        return lk(plus(plus(rest, f.subs[0]), f.subs[1]), right, steps, budget);
      case K::kOr:
        return lk(plus(rest, f.subs[0]), right, steps, budget) &&
               lk(plus(rest, f.subs[1]), right, steps, budget);
      case K::kImplies:
        return lk(rest, plus(right, f.subs[0]), steps, budget) &&
               lk(plus(rest, f.subs[1]), right, steps, budget);
      case K::kNot:
        return lk(rest, plus(right, f.subs[0]), steps, budget);
      default:
        break;
    }
  }
  for (std::size_t i = 0; i < right.size(); ++i) {
    const Formula f = right[i];
    if (atomic(f)) continue;
    auto rest = without(right, i);
    switch (f.kind) {
      case K::kAnd:
        return lk(left, plus(rest, f.subs[0]), steps, budget) &&
               lk(left, plus(rest, f.subs[1]), steps, budget);
      case K::kOr:
        return lk(left, plus(plus(rest, f.subs[0]), f.subs[1]), steps, budget);
      case K::kImplies:
        return lk(plus(left, f.subs[0]), plus(rest, f.subs[1]), steps, budget);
      case K::kNot:
        return lk(plus(left, f.subs[0]), rest, steps, budget);
      default:
        break;
    }
  }
  return false;
}

}  // namespace

bool blast(const Goal& goal, std::size_t step_budget) {
  std::size_t steps = 0;
  return lk(goal.hyps, {goal.concl}, steps, step_budget);
}

// ---- rule / erule ----------------------------------------------------------

std::optional<GoalList> apply_rule(const Goal& g, const std::string& name,
                                   const Context& ctx) {
  const Formula& c = g.concl;
  if (name == "conjI") {
    if (!c.is(K::kAnd)) return std::nullopt;
    return GoalList{with(g, g.hyps, c.subs[0]), with(g, g.hyps, c.subs[1])};
  }
  if (name == "impI") {
    if (!c.is(K::kImplies)) return std::nullopt;
    return GoalList{with(g, plus(g.hyps, c.subs[0]), c.subs[1])};
  }
  if (name == "notI") {
    if (!c.is(K::kNot)) return std::nullopt;
    return GoalList{with(g, plus(g.hyps, c.subs[0]), Formula::falsity())};
  }
  if (name == "disjI1" || name == "disjI2") {
    if (!c.is(K::kOr)) return std::nullopt;
    return GoalList{with(g, g.hyps, c.subs[name == "disjI1" ? 0 : 1])};
  }
  if (name == "refl") {
    if (!c.is(K::kEq) || c.terms[0] != c.terms[1]) return std::nullopt;
    return GoalList{};
  }
  const Lemma* lem = ctx.find_lemma(name);
  if (!lem) return std::nullopt;
  Substitution s;
  if (!match(to_schematic(lem->concl), c, s)) return std::nullopt;
  GoalList out;
  for (const auto& p : lem->premises) {
    Formula inst = instantiate(to_schematic(p), s);
    if (has_schematic(inst)) return std::nullopt;
    out.push_back(with(g, g.hyps, std::move(inst)));
  }
  return out;
}

std::vector<GoalList> apply_erule(const Goal& g, const std::string& name,
                                  const Context& ctx) {
  std::vector<GoalList> out;
  const Lemma* lem = nullptr;
  if (!is_builtin_erule(name)) {
    lem = ctx.find_lemma(name);
    if (!lem || lem->premises.empty()) return out;
  }
  for (std::size_t i = 0; i < g.hyps.size(); ++i) {
    const Formula& h = g.hyps[i];
    auto rest = without(g.hyps, i);
    if (name == "conjE") {
      if (h.is(K::kAnd))
        out.push_back({with(g, plus(plus(rest, h.subs[0]), h.subs[1]), g.concl)});
    } else if (name == "disjE") {
      if (h.is(K::kOr))
        out.push_back({with(g, plus(rest, h.subs[0]), g.concl),
                       with(g, plus(rest, h.subs[1]), g.concl)});
    } else if (name == "impE") {
      if (h.is(K::kImplies))
        out.push_back({with(g, rest, h.subs[0]),
                       with(g, plus(rest, h.subs[1]), g.concl)});
    } else if (name == "notE") {
      if (h.is(K::kNot)) out.push_back({with(g, rest, h.subs[0])});
    } else {
      Substitution s;
      if (!match(to_schematic(lem->premises[0]), h, s)) continue;
      Formula concl = instantiate(to_schematic(lem->concl), s);
      if (has_schematic(concl)) continue;
      GoalList gs;
      bool ok = true;
      for (std::size_t k = 1; k < lem->premises.size(); ++k) {
        Formula p = instantiate(to_schematic(lem->premises[k]), s);
        if (has_schematic(p)) ok = false;
        gs.push_back(with(g, rest, std::move(p)));
      }
      if (!ok) continue;
      gs.push_back(with(g, plus(rest, std::move(concl)), g.concl));
      out.push_back(std::move(gs));
    }
  }
  return out;
}

// ---- fastforce -----------------------------------------------------------

namespace {

class Fastforce {
 public:
  Fastforce(const RuleSet& rules, const Context& ctx, const TacticConfig& config)
      : rules_(rules), ctx_(ctx), config_(config) {}

  bool prove(const Goal& goal, int depth) {
    tick();
    for (const auto& g : auto_goal(goal, rules_, config_))
      if (!prove_hard(g, depth)) return false;
    return true;
  }

 private:
  void tick() {
    if (++steps_ > config_.fastforce_steps)
      throw BudgetExhausted("fastforce step budget exhausted");
  }

  bool all(const GoalList& gs, int depth) {
    for (const auto& g : gs)
      if (!prove(g, depth)) return false;
    return true;
  }

  bool prove_hard(const Goal& g, int depth) {
    if (blast(g, config_.fastforce_steps)) return true;
    if (depth <= 0) return false;
    const Formula& c = g.concl;
    if (c.is(K::kOr)) {
      // Classical: assume the negation of one disjunct.
      if (prove(with(g, plus(g.hyps, Formula::negate(c.subs[1])), c.subs[0]),
                depth - 1))
        return true;
    }
    for (std::size_t i = 0; i < g.hyps.size(); ++i) {
      const Formula& h = g.hyps[i];
      if (!h.is(K::kImplies) && !h.is(K::kNot)) continue;
      for (const auto& gs : apply_erule(g, h.is(K::kNot) ? "notE" : "impE", ctx_))
        if (all(gs, depth - 1)) return true;
    }
    for (const auto& lem : ctx_.lemmas()) {
      if (lem.has(LemmaAttr::kIntro)) {
        if (auto gs = apply_rule(g, lem.label, ctx_); gs && all(*gs, depth - 1))
          return true;
      }
      if (lem.has(LemmaAttr::kElim)) {
        for (const auto& gs : apply_erule(g, lem.label, ctx_))
          if (all(gs, depth - 1)) return true;
      }
    }
    return false;
  }

  const RuleSet& rules_;
  const Context& ctx_;
  const TacticConfig& config_;
  std::size_t steps_ = 0;
};

}  // namespace

bool fastforce(const Goal& goal, const RuleSet& rules, const Context& ctx,
               const TacticConfig& config) {
  return Fastforce(rules, ctx, config).prove(goal, config.fastforce_depth);
}

bool same_goals(const GoalList& a, const GoalList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].hyps != b[i].hyps || a[i].concl != b[i].concl) return false;
  return true;
}

}  // namespace psl::provers
