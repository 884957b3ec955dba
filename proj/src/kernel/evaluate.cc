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

#include "psl/evaluate.h"

#include <algorithm>

namespace psl {

namespace {

bool constructor_only(const Term& t) {
  if (!t.is_ctor()) return false;
  return std::all_of(t.args.begin(), t.args.end(), constructor_only);
}

class Evaluator {
 public:
  Evaluator(const Context& ctx, std::size_t budget) : budget_(budget) {
    rules_.terms = ctx.definitions();
  }

  Truth eval(const Formula& f, const std::map<std::string, Term>& env) {
    using K = Formula::Kind;
    switch (f.kind) {
      case K::kTrue: return Truth::kTrue;
      case K::kFalse: return Truth::kFalse;
      case K::kAtom: return Truth::kUnknown;
      case K::kEq: {
        auto l = value(f.terms[0], env);
        auto r = value(f.terms[1], env);
        if (!l || !r) return Truth::kUnknown;
        return *l == *r ? Truth::kTrue : Truth::kFalse;
      }
      case K::kNot: {
        Truth a = eval(f.subs[0], env);
        if (a == Truth::kUnknown) return a;
        return a == Truth::kTrue ? Truth::kFalse : Truth::kTrue;
      }
      case K::kAnd: {
        Truth a = eval(f.subs[0], env);
        if (a == Truth::kFalse) return a;
        Truth b = eval(f.subs[1], env);
        if (b == Truth::kFalse) return b;
        return a == Truth::kTrue && b == Truth::kTrue ? Truth::kTrue
                                                      : Truth::kUnknown;
      }
      case K::kOr: {
        Truth a = eval(f.subs[0], env);
        if (a == Truth::kTrue) return a;
        Truth b = eval(f.subs[1], env);
        if (b == Truth::kTrue) return b;
        return a == Truth::kFalse && b == Truth::kFalse ? Truth::kFalse
                                                        : Truth::kUnknown;
      }
      case K::kImplies: {
        Truth a = eval(f.subs[0], env);
        if (a == Truth::kFalse) return Truth::kTrue;
        Truth b = eval(f.subs[1], env);
        if (b == Truth::kTrue) return b;
        return a == Truth::kTrue && b == Truth::kFalse ? Truth::kFalse
                                                       : Truth::kUnknown;
      }
    }
    return Truth::kUnknown;
  }

 private:
  std::optional<Term> value(const Term& t,
                            const std::map<std::string, Term>& env) {
    Term ground = substitute_vars(t, env);
    try {
      auto r = rewrite_exhaustive(ground, rules_, budget_);
      if (!constructor_only(r.result)) return std::nullopt;
      return std::move(r.result);
    } catch (const BudgetExhausted&) {
      return std::nullopt;
    }
  }

  RuleSet rules_;
  std::size_t budget_;
};

}  // namespace

Truth evaluate_ground(const Formula& f, const std::map<std::string, Term>& env,
                      const Context& ctx, std::size_t budget) {
  return Evaluator(ctx, budget).eval(f, env);
}

int height(const Term& t) {
  int h = 0;
  for (const auto& a : t.args) h = std::max(h, height(a));
  return h + 1;
}

namespace {

// All terms of `type` with height exactly h, memoized by (type, h).
class TermEnumerator {
 public:
  explicit TermEnumerator(const Context& ctx) : ctx_(ctx) {}

  const std::vector<Term>& up_to(const std::string& type, int h) {
    auto key = std::make_pair(type, h);
    auto it = upto_.find(key);
    if (it != upto_.end()) return it->second;
    std::vector<Term> out;
    for (int k = 1; k <= h; ++k) {
      const auto& ex = exactly(type, k);
      out.insert(out.end(), ex.begin(), ex.end());
    }
    return upto_[key] = std::move(out);
  }

 private:
  const std::vector<Term>& exactly(const std::string& type, int h) {
    auto key = std::make_pair(type, h);
    auto it = exact_.find(key);
    if (it != exact_.end()) return it->second;
    std::vector<Term> out;
    const Datatype* dt = ctx_.find_datatype(type);
    if (dt && h >= 1) {
      for (const auto& c : dt->ctors) {
        if (c.arg_types.empty()) {
          if (h == 1) out.push_back(Term::ctor(c.name));
          continue;
        }
        // Argument tuples with max height exactly h - 1.
        std::vector<std::vector<Term>> choices;
        for (const auto& ty : c.arg_types) choices.push_back(up_to(ty, h - 1));
        if (std::any_of(choices.begin(), choices.end(),
                        [](const auto& v) { return v.empty(); }))
          continue;
        std::vector<std::size_t> idx(choices.size(), 0);
        for (;;) {
          std::vector<Term> args;
          int mh = 0;
          for (std::size_t i = 0; i < idx.size(); ++i) {
            args.push_back(choices[i][idx[i]]);
            mh = std::max(mh, height(args.back()));
          }
          if (mh == h - 1) out.push_back(Term::ctor(c.name, std::move(args)));
          std::size_t i = idx.size();
          while (i > 0) {
            --i;
            if (++idx[i] < choices[i].size()) break;
            idx[i] = 0;
            if (i == 0) {
              i = idx.size() + 1;
              break;
            }
          }
          if (i == idx.size() + 1) break;
        }
      }
    }
    return exact_[key] = std::move(out);
  }

  const Context& ctx_;
  std::map<std::pair<std::string, int>, std::vector<Term>> exact_;
  std::map<std::pair<std::string, int>, std::vector<Term>> upto_;
};

}  // namespace

std::vector<Term> ground_terms(const Context& ctx, const std::string& type,
                               int max_height) {
  TermEnumerator en(ctx);
  return en.up_to(type, max_height);
}

std::string to_string(const Counterexample& cex) {
  std::string out;
  for (const auto& [v, t] : cex.assignment) {
    if (!out.empty()) out += ", ";
    out += v + " = " + to_string(t);
  }
  return out;
}

std::optional<Counterexample> find_counterexample(const Goal& goal,
                                                  const Context& ctx, int bound,
                                                  std::size_t cap) {
  auto vars = free_vars(goal);
  auto types = ctx.var_types(goal);
  TermEnumerator en(ctx);
  std::vector<const std::vector<Term>*> domains;
  for (const auto& v : vars) {
    auto it = types.find(v);
    if (it == types.end() || !ctx.find_datatype(it->second)) return std::nullopt;
    domains.push_back(&en.up_to(it->second, bound));
    if (domains.back()->empty()) return std::nullopt;
  }
  Evaluator ev(ctx, kDefaultRewriteBudget);
  std::vector<std::size_t> idx(vars.size(), 0);
  for (std::size_t n = 0; n < cap; ++n) {
    std::map<std::string, Term> env;
    for (std::size_t i = 0; i < vars.size(); ++i)
      env.emplace(vars[i], (*domains[i])[idx[i]]);
    bool hyps_hold = std::all_of(goal.hyps.begin(), goal.hyps.end(),
                                 [&](const Formula& h) {
                                   return ev.eval(h, env) == Truth::kTrue;
                                 });
    if (hyps_hold && ev.eval(goal.concl, env) == Truth::kFalse) {
      Counterexample cex{goal.label, {}};
      for (std::size_t i = 0; i < vars.size(); ++i)
        cex.assignment.emplace_back(vars[i], env.at(vars[i]));
      return cex;
    }
    // Odometer with the last variable fastest.
    std::size_t i = vars.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++idx[i] < domains[i]->size()) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
    if (done) break;
  }
  return std::nullopt;
}

}  // namespace psl
