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

// Variant generation for Dynamic atoms and the deduplicating combination
// of their results.

#include <algorithm>

#include "psl/tactics.h"
#include "tactics/provers.h"

namespace psl {

namespace {

using Op = TacticSpec::Op;

// Subsets of `items` as index-ordered subsequences: by size, then
// lexicographically by position.
std::vector<std::vector<std::string>> subsets(
    const std::vector<std::string>& items, std::size_t min_size) {
  std::vector<std::vector<std::string>> out;
  const std::size_t n = items.size();
  for (std::size_t k = min_size; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::vector<std::string> pick;
      for (auto i : idx) pick.push_back(items[i]);
      out.push_back(std::move(pick));
      // Next combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::vector<std::string> minus(const std::vector<std::string>& all,
                               const std::vector<std::string>& drop) {
  std::vector<std::string> out;
  for (const auto& x : all)
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  return out;
}

std::vector<Variant> induct_variants(Op op, const Goal& g, const Context& ctx,
                                     std::size_t cap) {
  auto inductable = inductable_vars(g, ctx);
  auto free = free_vars(g);
  std::vector<std::optional<std::string>> rules{std::nullopt};
  for (auto& r : applicable_induct_rules(g, ctx)) rules.push_back(r);
  // Keep the subsequence count itself bounded.
  while (inductable.size() > 10) inductable.pop_back();
  auto var_sets = subsets(inductable, 1);
  bool generalize = op == Op::kInduct;

  std::size_t raw = 0;
  for (const auto& vs : var_sets) {
    std::size_t rest = generalize ? minus(free, vs).size() : 0;
    raw += (rest >= 20 ? cap + 1 : (std::size_t{1} << rest)) * rules.size();
    if (raw > cap) break;
  }
  const bool restricted = raw > cap;

  std::vector<Variant> out;
  for (const auto& vs : var_sets) {
    std::vector<std::vector<std::string>> arbs{{}};
    if (generalize) {
      auto rest = minus(free, vs);
      if (!restricted)
        arbs = subsets(rest, 0);
      else if (!rest.empty())
        arbs.push_back(rest);
    }
    for (const auto& arb : arbs) {
      for (const auto& rule : rules) {
        TacticSpec spec{op, {}, {}, {}};
        spec.induct = InductionSpec{vs, arb, rule};
        out.push_back({std::move(spec)});
      }
    }
  }
  if (out.size() > cap) out.resize(cap);
  return out;
}

std::vector<Variant> simp_variants(Op op, const Goal& g, const Context& ctx,
                                   std::size_t top) {
  std::vector<std::string> names;
  for (const Lemma* l : relevant_lemmas(g, ctx, ctx.lemmas().size())) {
    if (names.size() >= top) break;
    if (l->has(LemmaAttr::kSimp)) continue;
    if (rewrite_rules_of(*l).empty() && formula_rules_of(*l).empty()) continue;
    names.push_back(l->label);
  }
  std::vector<Variant> out;
  for (auto& add : subsets(names, 0)) out.push_back({TacticSpec{op, add, {}, {}}});
  return out;
}

}  // namespace

std::vector<Variant> generate_dynamic(AtomKind kind, const ProofState& s,
                                      const TacticEnv& env) {
  if (s.active().empty()) return {};
  const Goal& g = s.active().front();
  const Context& ctx = s.context();
  std::vector<Variant> out;
  switch (kind) {
    case AtomKind::kInduct:
      out = induct_variants(Op::kInduct, g, ctx, env.config.variant_cap);
      break;
    case AtomKind::kInductTac:
      out = induct_variants(Op::kInductTac, g, ctx, env.config.variant_cap);
      break;
    case AtomKind::kCases:
    case AtomKind::kCaseTac:
      for (const auto& v : inductable_vars(g, ctx)) {
        TacticSpec spec{kind == AtomKind::kCases ? Op::kCases : Op::kCaseTac,
                        {}, {}, {}};
        spec.induct.vars = {v};
        out.push_back({std::move(spec)});
      }
      break;
    case AtomKind::kSimp:
      out = simp_variants(Op::kSimp, g, ctx, env.config.relevance_top);
      break;
    case AtomKind::kAuto:
      out = simp_variants(Op::kAuto, g, ctx, env.config.relevance_top);
      break;
    case AtomKind::kClarsimp:
      out = simp_variants(Op::kClarsimp, g, ctx, env.config.relevance_top);
      break;
    case AtomKind::kRule:
    case AtomKind::kErule: {
      bool elim = kind == AtomKind::kErule;
      std::vector<std::string> names =
          elim ? provers::kBuiltinErules : provers::kBuiltinRules;
      for (const auto& l : ctx.lemmas())
        if (l.has(elim ? LemmaAttr::kElim : LemmaAttr::kIntro))
          names.push_back(l.label);
      for (const auto& n : names) {
        TacticSpec spec{elim ? Op::kErule : Op::kRule, {}, n, {}};
        out.push_back({std::move(spec)});
      }
      break;
    }
    case AtomKind::kFastforce:
      out.push_back({TacticSpec{Op::kFastforce, {}, {}, {}}});
      break;
    case AtomKind::kBlast:
      out.push_back({TacticSpec{Op::kBlast, {}, {}, {}}});
      break;
    default:
      break;
  }
  env.stats->variants_generated += out.size();
  return out;
}

namespace {

TacticStream dedup_from(std::shared_ptr<const std::vector<Variant>> variants,
                        std::size_t i,
                        std::shared_ptr<std::vector<GoalList>> kept,
                        ProofState s, TacticEnv env) {
  return TacticStream::defer([=]() -> TacticStream {
    for (std::size_t k = i; k < variants->size(); ++k) {
      TacticStream r = run_spec((*variants)[k].spec, s, env);
      const TacticResult* h = r.head();
      if (!h) {
        env.stats->variants_failed++;
        continue;
      }
      bool seen = std::any_of(kept->begin(), kept->end(), [&](const GoalList& g) {
        return provers::same_goals(g, h->state.active());
      });
      if (seen) {
        env.stats->variants_duplicate++;
        continue;
      }
      kept->push_back(h->state.active());
      return plus(r, dedup_from(variants, k + 1, kept, s, env));
    }
    return TacticStream::empty();
  });
}

}  // namespace

TacticStream dedup_variants(std::vector<Variant> variants, const ProofState& s,
                            const TacticEnv& env) {
  return dedup_from(
      std::make_shared<const std::vector<Variant>>(std::move(variants)), 0,
      std::make_shared<std::vector<GoalList>>(), s, env);
}

}  // namespace psl
