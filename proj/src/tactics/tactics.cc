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

#include "psl/tactics.h"

#include <algorithm>
#include <sstream>

#include "psl/evaluate.h"
#include "tactics/provers.h"

namespace psl {

// ---- diagnostics and registry ----------------------------------------------

void Diagnostics::warn_once(const std::string& key, const std::string& message) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (seen_.insert(key).second) messages_.push_back(message);
}

void Diagnostics::note(const std::string& message) {
  std::lock_guard<std::mutex> lock(mutex_);
  messages_.push_back(message);
}

std::vector<std::string> Diagnostics::messages() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return messages_;
}

UserTacticRegistry::UserTacticRegistry() {
  tactics_["assumption"] = [](const ProofState& s) {
    static const TacticEnv env;
    TacticSpec spec;
    spec.op = TacticSpec::Op::kAssumption;
    return run_spec(spec, s, env);
  };
}

void UserTacticRegistry::add(const std::string& name, Tactic tactic) {
  tactics_[name] = std::move(tactic);
}

const Tactic* UserTacticRegistry::find(const std::string& name) const {
  auto it = tactics_.find(name);
  return it == tactics_.end() ? nullptr : &it->second;
}

std::set<std::string> UserTacticRegistry::names() const {
  std::set<std::string> out;
  for (const auto& [n, t] : tactics_) out.insert(n);
  return out;
}

// ---- script text -----------------------------------------------------------

namespace {

using Op = TacticSpec::Op;

const std::vector<std::pair<Op, std::string>> kOpNames = {
    {Op::kAuto, "auto"},         {Op::kSimp, "simp"},
    {Op::kClarsimp, "clarsimp"}, {Op::kFastforce, "fastforce"},
    {Op::kBlast, "blast"},       {Op::kAssumption, "assumption"},
    {Op::kRule, "rule"},         {Op::kErule, "erule"},
    {Op::kInduct, "induct"},     {Op::kInductTac, "induct_tac"},
    {Op::kCases, "cases"},       {Op::kCaseTac, "case_tac"},
    {Op::kDefer, "defer"},       {Op::kSubgoal, "subgoal"},
    {Op::kDone, "done"},
};

std::string op_name(Op op) {
  for (const auto& [o, n] : kOpNames)
    if (o == op) return n;
  return "";
}

bool takes_simp_add(Op op) {
  return op == Op::kAuto || op == Op::kSimp || op == Op::kClarsimp ||
         op == Op::kFastforce;
}

}  // namespace

std::string render(const TacticSpec& spec) {
  std::string out = op_name(spec.op);
  switch (spec.op) {
    case Op::kRule:
    case Op::kErule:
      return out + " " + spec.name;
    case Op::kInduct:
    case Op::kInductTac: {
      std::string rest = to_string(spec.induct);  // "induct ..."
      return out + rest.substr(std::string("induct").size());
    }
    case Op::kCases:
    case Op::kCaseTac:
      return out + " " + (spec.induct.vars.empty() ? "" : spec.induct.vars[0]);
    default:
      break;
  }
  if (takes_simp_add(spec.op) && !spec.add.empty()) {
    out += spec.op == Op::kSimp ? " add:" : " simp add:";
    for (const auto& a : spec.add) out += " " + a;
  }
  return out;
}

std::optional<TacticSpec> parse_tactic_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.empty()) return std::nullopt;
  TacticSpec spec;
  bool found = false;
  for (const auto& [o, n] : kOpNames) {
    if (n == words[0]) {
      spec.op = o;
      found = true;
    }
  }
  if (!found) return std::nullopt;
  std::size_t i = 1;
  auto is_key = [](const std::string& w) { return !w.empty() && w.back() == ':'; };
  switch (spec.op) {
    case Op::kRule:
    case Op::kErule:
      if (words.size() != 2 || is_key(words[1])) return std::nullopt;
      spec.name = words[1];
      return spec;
    case Op::kCases:
    case Op::kCaseTac:
      if (words.size() != 2 || is_key(words[1])) return std::nullopt;
      spec.induct.vars = {words[1]};
      return spec;
    case Op::kInduct:
    case Op::kInductTac: {
      while (i < words.size() && !is_key(words[i])) spec.induct.vars.push_back(words[i++]);
      if (spec.induct.vars.empty()) return std::nullopt;
      if (i < words.size() && words[i] == "arbitrary:") {
        if (spec.op == Op::kInductTac) return std::nullopt;
        ++i;
        while (i < words.size() && !is_key(words[i]))
          spec.induct.arbitrary.push_back(words[i++]);
        if (spec.induct.arbitrary.empty()) return std::nullopt;
      }
      if (i < words.size() && words[i] == "rule:") {
        if (i + 2 != words.size()) return std::nullopt;
        spec.induct.rule = words[i + 1];
        i += 2;
      }
      if (i != words.size()) return std::nullopt;
      return spec;
    }
    default:
      break;
  }
  if (i == words.size()) return spec;
  if (!takes_simp_add(spec.op)) return std::nullopt;
  if (spec.op != Op::kSimp) {
    if (words[i] != "simp") return std::nullopt;
    ++i;
  }
  if (i >= words.size() || words[i] != "add:") return std::nullopt;
  for (++i; i < words.size(); ++i) spec.add.push_back(words[i]);
  if (spec.add.empty()) return std::nullopt;
  return spec;
}

// ---- running specs -------------------------------------------------------

namespace {

GoalList concat(GoalList front, const GoalList& active, std::size_t drop) {
  front.insert(front.end(), active.begin() + static_cast<std::ptrdiff_t>(drop),
               active.end());
  return front;
}

std::vector<ProofState> compute(const TacticSpec& spec, const ProofState& s,
                                const TacticEnv& env) {
  const GoalList& active = s.active();
  const Context& ctx = s.context();
  const TacticConfig& cfg = env.config;
  switch (spec.op) {
    case Op::kDefer: {
      if (active.empty()) return {};
      GoalList next(active.begin() + 1, active.end());
      next.push_back(active.front());
      return {s.with_active(std::move(next))};
    }
    case Op::kSubgoal:
      if (active.empty()) return {};
      return {s.push_focus({active.front()},
                           GoalList(active.begin() + 1, active.end()))};
    case Op::kDone:
      if (s.depth() > 1 && active.empty()) return {s.pop_focus()};
      return {};
    case Op::kAuto: {
      if (active.empty()) return {};
      auto rules = provers::simp_set(ctx, spec.add);
      if (!rules) return {};
      GoalList next;
      for (const auto& g : active) {
        GoalList part = provers::auto_goal(g, *rules, cfg);
        next.insert(next.end(), part.begin(), part.end());
      }
      if (provers::same_goals(next, active)) return {};
      return {s.with_active(std::move(next))};
    }
    default:
      break;
  }
  if (active.empty()) return {};
  const Goal& g = active.front();
  switch (spec.op) {
    case Op::kSimp: {
      auto rules = provers::simp_set(ctx, spec.add);
      if (!rules) return {};
      auto out = provers::simp_goal(g, *rules, cfg.rewrite_budget);
      using SK = provers::SimpOutcome::Kind;
      if (out.kind == SK::kUnchanged) return {};
      GoalList front;
      if (out.kind == SK::kChanged) front.push_back(std::move(out.goal));
      return {s.with_active(concat(std::move(front), active, 1))};
    }
    case Op::kClarsimp: {
      auto rules = provers::simp_set(ctx, spec.add);
      if (!rules) return {};
      auto out = provers::simp_goal(g, *rules, cfg.rewrite_budget);
      using SK = provers::SimpOutcome::Kind;
      if (out.kind == SK::kSolved) return {s.with_active(concat({}, active, 1))};
      bool changed = out.kind == SK::kChanged;
      Goal cur = changed ? std::move(out.goal) : g;
      auto parts = provers::clarify(cur);
      if (!parts && !changed) return {};
      GoalList front = parts ? std::move(*parts) : GoalList{cur};
      return {s.with_active(concat(std::move(front), active, 1))};
    }
    case Op::kFastforce: {
      auto rules = provers::simp_set(ctx, spec.add);
      if (!rules || !provers::fastforce(g, *rules, ctx, cfg)) return {};
      return {s.with_active(concat({}, active, 1))};
    }
    case Op::kBlast:
      if (!provers::blast(g, cfg.fastforce_steps)) return {};
      return {s.with_active(concat({}, active, 1))};
    case Op::kAssumption:
      if (std::find(g.hyps.begin(), g.hyps.end(), g.concl) == g.hyps.end())
        return {};
      return {s.with_active(concat({}, active, 1))};
    case Op::kRule: {
      auto gs = provers::apply_rule(g, spec.name, ctx);
      if (!gs) return {};
      return {s.with_active(concat(std::move(*gs), active, 1))};
    }
    case Op::kErule: {
      std::vector<ProofState> out;
      for (auto& gs : provers::apply_erule(g, spec.name, ctx))
        out.push_back(s.with_active(concat(std::move(gs), active, 1)));
      return out;
    }
    case Op::kInduct:
    case Op::kInductTac: {
      auto gs = induction_scheme(g, spec.induct, ctx);
      if (!gs) return {};
      return {s.with_active(concat(std::move(*gs), active, 1))};
    }
    case Op::kCases:
    case Op::kCaseTac: {
      if (spec.induct.vars.size() != 1) return {};
      auto gs = case_split(g, spec.induct.vars[0], ctx);
      if (!gs) return {};
      return {s.with_active(concat(std::move(*gs), active, 1))};
    }
    default:
      return {};
  }
}

TacticStream results_stream(const std::string& text,
                            const std::vector<ProofState>& states) {
  TacticStream out;
  for (std::size_t i = states.size(); i-- > 0;) {
    TraceEntry e{text, i, states[i].active().size()};
    out = TacticStream::cons(TacticResult{std::move(e), states[i]}, out);
  }
  return out;
}

TacticStream identity(const ProofState& s) {
  return unit(TacticResult{TraceEntry{"", 0, s.active().size()}, s});
}

}  // namespace

TacticStream run_spec(const TacticSpec& spec, const ProofState& s,
                      const TacticEnv& env) {
  return TacticStream::defer([spec, s, env]() -> TacticStream {
    try {
      return results_stream(render(spec), compute(spec, s, env));
    } catch (const BudgetExhausted&) {
      return TacticStream::empty();
    }
  });
}

// ---- relevance and hammer ------------------------------------------------

namespace {

std::set<std::string> goal_symbols(const Goal& g) {
  std::set<std::string> out = symbols(g.concl);
  for (const auto& h : g.hyps) {
    auto s = symbols(h);
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::set<std::string> lemma_symbols(const Lemma& l) {
  std::set<std::string> out = symbols(l.concl);
  for (const auto& p : l.premises) {
    auto s = symbols(p);
    out.insert(s.begin(), s.end());
  }
  return out;
}

}  // namespace

std::vector<const Lemma*> relevant_lemmas(const Goal& goal, const Context& ctx,
                                          std::size_t limit) {
  auto gs = goal_symbols(goal);
  std::vector<std::pair<std::size_t, const Lemma*>> scored;
  for (const auto& lem : ctx.lemmas()) {
    auto ls = lemma_symbols(lem);
    std::size_t n = 0;
    for (const auto& x : ls) n += gs.count(x);
    if (n > 0) scored.emplace_back(n, &lem);
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<const Lemma*> out;
  for (std::size_t i = 0; i < scored.size() && i < limit; ++i)
    out.push_back(scored[i].second);
  return out;
}

namespace {

// Lemmas worth passing to the simplifier: rewritable and not already simp.
std::vector<std::string> simp_candidates(const Goal& g, const Context& ctx,
                                         std::size_t limit) {
  std::vector<std::string> out;
  for (const Lemma* l : relevant_lemmas(g, ctx, ctx.lemmas().size())) {
    if (out.size() >= limit) break;
    if (l->has(LemmaAttr::kSimp)) continue;
    if (rewrite_rules_of(*l).empty() && formula_rules_of(*l).empty()) continue;
    out.push_back(l->label);
  }
  return out;
}

bool solves_first(const TacticSpec& spec, const ProofState& s,
                  const TacticEnv& env) {
  try {
    auto states = compute(spec, s, env);
    return !states.empty() &&
           states.front().active().size() + 1 == s.active().size();
  } catch (const BudgetExhausted&) {
    return false;
  }
}

// Drops lemmas one at a time while the step still closes the goal.
TacticSpec minimize(TacticSpec spec, const ProofState& s, const TacticEnv& env) {
  for (std::size_t i = 0; i < spec.add.size();) {
    TacticSpec fewer = spec;
    fewer.add.erase(fewer.add.begin() + static_cast<std::ptrdiff_t>(i));
    if (solves_first(fewer, s, env))
      spec = std::move(fewer);
    else
      ++i;
  }
  return spec;
}

std::optional<TacticSpec> hammer_spec(const ProofState& s, const TacticEnv& env) {
  if (s.active().empty()) return std::nullopt;
  auto cands =
      simp_candidates(s.active().front(), s.context(), env.config.hammer_lemmas);
  TacticSpec simp{Op::kSimp, cands, {}, {}};
  if (solves_first(simp, s, env)) return minimize(simp, s, env);
  TacticSpec ff{Op::kFastforce, {}, {}, {}};
  if (solves_first(ff, s, env)) return ff;
  if (cands.empty()) return std::nullopt;
  ff.add = cands;
  if (solves_first(ff, s, env)) return minimize(ff, s, env);
  return std::nullopt;
}

TacticStream counterexample_check(const char* tool, int bound,
                                  const ProofState& s, const TacticEnv& env) {
  return TacticStream::defer([tool, bound, s, env]() -> TacticStream {
    if (s.active().empty()) return identity(s);
    const Goal& g = s.active().front();
    auto cex = find_counterexample(g, s.context(), bound);
    if (!cex) return identity(s);
    env.diagnostics->note(std::string(tool) + ": counterexample to " + g.label +
                          ": " + to_string(*cex));
    return TacticStream::empty();
  });
}

TacticStream concat_specs(std::vector<TacticSpec> specs, std::size_t i,
                          const ProofState& s, const TacticEnv& env) {
  if (i >= specs.size()) return TacticStream::empty();
  TacticStream head = run_spec(specs[i], s, env);
  return plus(head, TacticStream::defer([specs = std::move(specs), i, s, env]() {
                return concat_specs(specs, i + 1, s, env);
              }));
}

std::vector<std::string> rule_names(const Context& ctx, bool elim) {
  std::vector<std::string> out =
      elim ? provers::kBuiltinErules : provers::kBuiltinRules;
  for (const auto& l : ctx.lemmas())
    if (l.has(elim ? LemmaAttr::kElim : LemmaAttr::kIntro)) out.push_back(l.label);
  return out;
}

// The first variant whose stream is non-empty.
TacticStream orelse(std::vector<Variant> variants, const ProofState& s,
                    const TacticEnv& env) {
  return TacticStream::defer([variants = std::move(variants), s, env]() {
    for (const auto& v : variants) {
      TacticStream r = run_spec(v.spec, s, env);
      if (!r.is_empty()) return r;
      env.stats->variants_failed++;
    }
    return TacticStream::empty();
  });
}

TacticStream unsupported(const AtomDescriptor& atom, const TacticEnv& env) {
  std::string name(atom_name(atom.kind));
  env.diagnostics->warn_once(
      name, "warning: " + name + " is not supported by this backend; it fails");
  return TacticStream::empty();
}

}  // namespace

TacticStream eval_atom(const AtomDescriptor& atom, const ProofState& s,
                       const TacticEnv& env) {
  using A = AtomKind;
  if (atom.dynamic) {
    switch (atom.kind) {
      case A::kInduct:
      case A::kInductTac:
      case A::kCases:
      case A::kCaseTac:
      case A::kRule:
      case A::kErule:
        return dedup_variants(generate_dynamic(atom.kind, s, env), s, env);
      case A::kSimp:
      case A::kAuto:
      case A::kClarsimp:
        return orelse(generate_dynamic(atom.kind, s, env), s, env);
      case A::kCoinduction:
        return unsupported(atom, env);
      default:
        break;  // the plain tactic is its only variant
    }
  }
  auto spec = [](Op op) { return TacticSpec{op, {}, {}, {}}; };
  switch (atom.kind) {
    case A::kSimp: return run_spec(spec(Op::kSimp), s, env);
    case A::kClarsimp: return run_spec(spec(Op::kClarsimp), s, env);
    case A::kFastforce: return run_spec(spec(Op::kFastforce), s, env);
    case A::kAuto: return run_spec(spec(Op::kAuto), s, env);
    case A::kBlast: return run_spec(spec(Op::kBlast), s, env);
    case A::kInduct:
    case A::kInductTac:
    case A::kCases:
    case A::kCaseTac: {
      if (s.active().empty()) return TacticStream::empty();
      auto vars = inductable_vars(s.active().front(), s.context());
      if (vars.empty()) return TacticStream::empty();
      Op op = atom.kind == A::kInduct      ? Op::kInduct
              : atom.kind == A::kInductTac ? Op::kInductTac
              : atom.kind == A::kCases     ? Op::kCases
                                           : Op::kCaseTac;
      TacticSpec t = spec(op);
      t.induct.vars = {vars.front()};
      return run_spec(t, s, env);
    }
    case A::kRule:
    case A::kErule: {
      bool elim = atom.kind == A::kErule;
      std::vector<TacticSpec> specs;
      for (const auto& n : rule_names(s.context(), elim)) {
        TacticSpec t = spec(elim ? Op::kErule : Op::kRule);
        t.name = n;
        specs.push_back(std::move(t));
      }
      return concat_specs(std::move(specs), 0, s, env);
    }
    case A::kIsSolved:
      if (!s.active().empty()) return TacticStream::empty();
      if (s.depth() > 1) return run_spec(spec(Op::kDone), s, env);
      return identity(s);
    case A::kDefer: return run_spec(spec(Op::kDefer), s, env);
    case A::kSubgoal: return run_spec(spec(Op::kSubgoal), s, env);
    case A::kSkip: return identity(s);
    case A::kFail: return TacticStream::empty();
    case A::kUser: {
      const Tactic* t = env.users->find(atom.user_name);
      if (!t) return TacticStream::empty();
      return (*t)(s);
    }
    case A::kHammer:
      return TacticStream::defer([s, env]() -> TacticStream {
        auto found = hammer_spec(s, env);
        if (!found) return TacticStream::empty();
        return run_spec(*found, s, env);
      });
    case A::kQuickcheck:
      return counterexample_check("quickcheck", env.config.quickcheck_bound, s,
                                  env);
    case A::kNitpick:
      return counterexample_check("nitpick", env.config.nitpick_bound, s, env);
    case A::kCoinduction:
    case A::kIntroClasses:
    case A::kTransfer:
    case A::kNormalization:
      return unsupported(atom, env);
  }
  return TacticStream::empty();
}

}  // namespace psl
