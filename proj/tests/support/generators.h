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

// Generators and probes shared by the unit and acceptance tests.

#ifndef PSL_TESTS_SUPPORT_GENERATORS_H_
#define PSL_TESTS_SUPPORT_GENERATORS_H_

#include <atomic>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "psl/kernel.h"
#include "psl/lazy_stream.h"
#include "psl/strategy.h"
#include "psl/tactics.h"
#include "psl/theory.h"
#include "psl/trace.h"

namespace psl::testing {

using Rng = std::mt19937;

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// ---- streams ---------------------------------------------------------------

inline LazyStream<int> random_stream(Rng& rng, std::size_t max_len = 5) {
  std::vector<int> xs(pick(rng, max_len + 1));
  for (auto& x : xs) x = static_cast<int>(pick(rng, 10));
  return from_vector(xs);
}

// A Kleisli arrow int -> stream<int> drawn from a small family.
struct IntArrow {
  int kind = 0;
  int k = 0;
  LazyStream<int> operator()(int x) const {
    switch (kind) {
      case 0: return unit(x + k);
      case 1: return LazyStream<int>::empty();
      case 2: return from_vector(std::vector<int>{x, x * k});
      case 3: return x % 2 == 0 ? unit(x / 2) : LazyStream<int>::empty();
      default: {
        std::vector<int> out;
        for (int i = 0; i < x % 4; ++i) out.push_back(i + k);
        return from_vector(out);
      }
    }
  }
};

inline IntArrow random_arrow(Rng& rng) {
  return IntArrow{static_cast<int>(pick(rng, 5)), static_cast<int>(pick(rng, 5))};
}

inline std::vector<int> all(const LazyStream<int>& s) { return take(100000, s); }

// ---- trace logs --------------------------------------------------------------

inline TraceLog random_log(Rng& rng, std::size_t max_len = 4) {
  TraceLog log;
  std::size_t n = pick(rng, max_len + 1);
  for (std::size_t i = 0; i < n; ++i)
    log = log.push(TraceEntry{"t" + std::to_string(pick(rng, 3)), pick(rng, 2),
                              pick(rng, 3)});
  return log;
}

// ---- strategies ----------------------------------------------------------------

// A theory whose goals react differently to the probe atoms below.
inline Theory probe_theory() {
  return parse_theory(R"(
datatype nat = Zero | Suc nat
fun add Zero y = y
fun add (Suc x) y = Suc (add x y)
goal g1: add Zero x = x
goal g2: A & B ==> B
goal g3: add x Zero = x
goal g4: P ==> P | Q
)");
}

inline ProofState probe_state(const Theory& th, std::size_t first,
                              std::size_t count) {
  GoalList goals;
  for (std::size_t i = 0; i < count; ++i)
    goals.push_back(th.goals[(first + i) % th.goals.size()]);
  return ProofState(th.context, goals);
}

struct ProbeCounters {
  std::atomic<std::size_t> probe{0};
};

// Registers `two` (two identity results), `rot` (defer with a distinct
// text) and `probe` (identity, counting invocations).
inline std::shared_ptr<ProbeCounters> register_probes(TacticEnv& env) {
  auto counters = std::make_shared<ProbeCounters>();
  env.users->add("two", [](const ProofState& s) {
    return from_vector(std::vector<TacticResult>{
        {TraceEntry{"two_a", 0, s.active().size()}, s},
        {TraceEntry{"two_b", 1, s.active().size()}, s}});
  });
  env.users->add("rot", [](const ProofState& s) {
    if (s.active().empty()) return TacticStream::empty();
    GoalList g(s.active().begin() + 1, s.active().end());
    g.push_back(s.active().front());
    return unit(TacticResult{TraceEntry{"rot", 0, g.size()}, s.with_active(g)});
  });
  env.users->add("probe", [counters](const ProofState& s) {
    ++counters->probe;
    return unit(TacticResult{TraceEntry{"probe", 0, s.active().size()}, s});
  });
  return counters;
}

inline AtomDescriptor user(const std::string& name) {
  return AtomDescriptor{AtomKind::kUser, false, name};
}

inline CorePtr random_atom(Rng& rng) {
  static const std::vector<AtomDescriptor> atoms = {
      {AtomKind::kSkip, false, {}},   {AtomKind::kFail, false, {}},
      {AtomKind::kSimp, false, {}},   {AtomKind::kAuto, false, {}},
      {AtomKind::kErule, false, {}},  {AtomKind::kDefer, false, {}},
      {AtomKind::kIsSolved, false, {}}, {AtomKind::kRule, false, {}},
      user("two"),                    user("rot"),
      user("assumption"),
  };
  return core_atom(atoms[pick(rng, atoms.size())]);
}

inline CorePtr random_core(Rng& rng, int depth) {
  if (depth <= 0 || pick(rng, 4) == 0) {
    switch (pick(rng, 8)) {
      case 0: return core_skip();
      case 1: return core_fail();
      default: return random_atom(rng);
    }
  }
  switch (pick(rng, 8)) {
    case 0:
    case 1: return core_then(random_core(rng, depth - 1), random_core(rng, depth - 1));
    case 2:
    case 3: return core_alt(random_core(rng, depth - 1), random_core(rng, depth - 1));
    case 4: return core_or(random_core(rng, depth - 1), random_core(rng, depth - 1));
    case 5: return core_rep(random_core(rng, depth - 1));
    case 6: return core_repn(random_core(rng, depth - 1));
    default:
      return core_comb(CombKind::kCut, {random_core(rng, depth - 1)},
                       static_cast<int>(1 + pick(rng, 3)));
  }
}

// Replaces every sequential Ors/Alts/Then-over-Cut shape with its parallel
// counterpart: Or -> POrs, Alt -> PAlts, Then -> PThenAll.
inline CorePtr parallelize(const CorePtr& c) {
  std::vector<CorePtr> subs;
  for (const auto& s : c->subs) subs.push_back(parallelize(s));
  switch (c->kind) {
    case Core::Kind::kOr: return core_comb(CombKind::kPOrs, subs);
    case Core::Kind::kAlt: return core_comb(CombKind::kPAlts, subs);
    case Core::Kind::kThen: return core_comb(CombKind::kPThenAll, subs);
    case Core::Kind::kRep: return core_rep(subs[0]);
    case Core::Kind::kRepN: return core_repn(subs[0]);
    case Core::Kind::kComb: return core_comb(c->comb, subs, c->cut);
    default: return c;
  }
}

}  // namespace psl::testing

#endif  // PSL_TESTS_SUPPORT_GENERATORS_H_
