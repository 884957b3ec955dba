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

#include "psl/strategy.h"

#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "psl/kernel.h"
#include "psl/lexer.h"

namespace psl {

namespace {

constexpr std::array<std::pair<AtomKind, std::string_view>, 24> kAtomNames = {{
    {AtomKind::kSimp, "Simp"},
    {AtomKind::kClarsimp, "Clarsimp"},
    {AtomKind::kFastforce, "Fastforce"},
    {AtomKind::kAuto, "Auto"},
    {AtomKind::kInduct, "Induct"},
    {AtomKind::kInductTac, "InductTac"},
    {AtomKind::kRule, "Rule"},
    {AtomKind::kErule, "Erule"},
    {AtomKind::kCases, "Cases"},
    {AtomKind::kCaseTac, "CaseTac"},
    {AtomKind::kCoinduction, "Coinduction"},
    {AtomKind::kBlast, "Blast"},
    {AtomKind::kIsSolved, "IsSolved"},
    {AtomKind::kDefer, "Defer"},
    {AtomKind::kIntroClasses, "IntroClasses"},
    {AtomKind::kTransfer, "Transfer"},
    {AtomKind::kNormalization, "Normalization"},
    {AtomKind::kSkip, "Skip"},
    {AtomKind::kFail, "Fail"},
    {AtomKind::kSubgoal, "Subgoal"},
    {AtomKind::kUser, "User"},
    {AtomKind::kHammer, "Hammer"},
    {AtomKind::kNitpick, "Nitpick"},
    {AtomKind::kQuickcheck, "Quickcheck"},
}};

const std::map<std::string_view, Strategy::Kind> kListCombinators = {
    {"Thens", Strategy::Kind::kThens},       {"Ors", Strategy::Kind::kOrs},
    {"Alts", Strategy::Kind::kAlts},         {"POrs", Strategy::Kind::kPOrs},
    {"PAlts", Strategy::Kind::kPAlts},       {"PThenOne", Strategy::Kind::kPThenOne},
    {"PThenAll", Strategy::Kind::kPThenAll},
};

std::string_view combinator_name(Strategy::Kind k) {
  switch (k) {
    case Strategy::Kind::kThens: return "Thens";
    case Strategy::Kind::kOrs: return "Ors";
    case Strategy::Kind::kAlts: return "Alts";
    case Strategy::Kind::kPOrs: return "POrs";
    case Strategy::Kind::kPAlts: return "PAlts";
    case Strategy::Kind::kPThenOne: return "PThenOne";
    case Strategy::Kind::kPThenAll: return "PThenAll";
    case Strategy::Kind::kRepeat: return "Repeat";
    case Strategy::Kind::kRepeatN: return "RepeatN";
    case Strategy::Kind::kCut: return "Cut";
    default: return "";
  }
}

bool reserved(std::string_view name) {
  return atom_kind(name) || kListCombinators.count(name) || name == "Repeat" ||
         name == "RepeatN" || name == "Cut" || name == "Dynamic" ||
         name == "strategy";
}

}  // namespace

std::string_view atom_name(AtomKind kind) {
  for (const auto& [k, n] : kAtomNames)
    if (k == kind) return n;
  return "";
}

std::optional<AtomKind> atom_kind(std::string_view name) {
  for (const auto& [k, n] : kAtomNames)
    if (n == name) return k;
  return std::nullopt;
}

bool is_default_tactic(AtomKind kind) {
  return static_cast<int>(kind) <= static_cast<int>(AtomKind::kBlast);
}

std::string to_string(const AtomDescriptor& atom) {
  if (atom.kind == AtomKind::kUser) return "User \"" + atom.user_name + "\"";
  std::string name(atom_name(atom.kind));
  return atom.dynamic ? "Dynamic (" + name + ")" : name;
}

Strategy Strategy::make_atom(AtomKind k) {
  Strategy s;
  s.atom.kind = k;
  return s;
}

Strategy Strategy::make_dynamic(AtomKind k) {
  Strategy s = make_atom(k);
  s.atom.dynamic = true;
  return s;
}

Strategy Strategy::make_user(std::string name) {
  Strategy s = make_atom(AtomKind::kUser);
  s.atom.user_name = std::move(name);
  return s;
}

Strategy Strategy::make_ref(std::string name) {
  Strategy s;
  s.kind = Kind::kRef;
  s.ref = std::move(name);
  return s;
}

Strategy Strategy::make(Kind k, std::vector<Strategy> subs) {
  Strategy s;
  s.kind = k;
  s.subs = std::move(subs);
  return s;
}

Strategy Strategy::make_cut(int n, Strategy sub) {
  Strategy s = make(Kind::kCut, {std::move(sub)});
  s.cut = n;
  return s;
}

std::string render(const Strategy& s) {
  using K = Strategy::Kind;
  switch (s.kind) {
    case K::kAtom: return to_string(s.atom);
    case K::kRef: return s.ref;
    case K::kRepeat:
    case K::kRepeatN:
      return std::string(combinator_name(s.kind)) + " (" + render(s.subs[0]) +
             ")";
    case K::kCut:
      return "Cut " + std::to_string(s.cut) + " (" + render(s.subs[0]) + ")";
    default: {
      std::string out = std::string(combinator_name(s.kind)) + " [";
      for (std::size_t i = 0; i < s.subs.size(); ++i) {
        if (i) out += ", ";
        out += render(s.subs[i]);
      }
      return out + "]";
    }
  }
}

const Strategy* StrategyFile::find(std::string_view name) const {
  for (const auto& d : defs)
    if (d.name == name) return &d.body;
  return nullptr;
}

void StrategyFile::merge(const StrategyFile& other) {
  for (const auto& d : other.defs) {
    if (find(d.name))
      throw std::runtime_error("duplicate strategy '" + d.name + "'");
    defs.push_back(d);
  }
}

std::string render(const StrategyFile& file) {
  std::string out;
  for (const auto& d : file.defs)
    out += "strategy " + d.name + " = " + render(d.body) + "\n";
  return out;
}

namespace {

class StrategyParser {
 public:
  StrategyParser(TokenStream& ts, const StrategyFile* base,
                 const StrategyFile* local)
      : ts_(ts), base_(base), local_(local) {}

  Strategy expr() {
    if (ts_.accept_symbol("(")) {
      Strategy s = expr();
      ts_.expect_symbol(")");
      return s;
    }
    const Token& at = ts_.peek();
    std::string name = ts_.expect_ident("strategy");
    if (auto it = kListCombinators.find(name); it != kListCombinators.end())
      return list(at, it->second);
    if (name == "Repeat" || name == "RepeatN") {
      ts_.expect_symbol("(");
      Strategy body = expr();
      ts_.expect_symbol(")");
      return Strategy::make(
          name == "Repeat" ? Strategy::Kind::kRepeat : Strategy::Kind::kRepeatN,
          {std::move(body)});
    }
    if (name == "Cut") {
      const Token& nt = ts_.peek();
      int n = ts_.expect_int();
      if (n < 1) TokenStream::fail_at(nt, "Cut bound must be at least 1");
      return Strategy::make_cut(n, expr());
    }
    if (name == "Dynamic") {
      ts_.expect_symbol("(");
      const Token& dt = ts_.peek();
      std::string inner = ts_.expect_ident("default tactic");
      ts_.expect_symbol(")");
      auto k = atom_kind(inner);
      if (!k || !is_default_tactic(*k))
        TokenStream::fail_at(dt, "Dynamic expects a default tactic, found '" +
                                     inner + "'");
      return Strategy::make_dynamic(*k);
    }
    if (name == "User") {
      if (ts_.peek().kind != Token::Kind::kString)
        ts_.fail("User expects a quoted tactic name");
      std::string tac = ts_.next().text;
      if (tac.empty()) TokenStream::fail_at(at, "empty User tactic name");
      return Strategy::make_user(std::move(tac));
    }
    if (auto k = atom_kind(name)) return Strategy::make_atom(*k);
    if (!(local_ && local_->find(name)) && !(base_ && base_->find(name)))
      TokenStream::fail_at(at, "unresolved strategy '" + name + "'");
    return Strategy::make_ref(name);
  }

 private:
  Strategy list(const Token& at, Strategy::Kind kind) {
    ts_.expect_symbol("[");
    std::vector<Strategy> items{expr()};
    while (ts_.accept_symbol(",")) items.push_back(expr());
    ts_.expect_symbol("]");
    bool binary = kind == Strategy::Kind::kPThenOne ||
                  kind == Strategy::Kind::kPThenAll;
    if (binary && items.size() != 2)
      TokenStream::fail_at(at, std::string(combinator_name(kind)) +
                                   " takes exactly two strategies, got " +
                                   std::to_string(items.size()));
    return Strategy::make(kind, std::move(items));
  }

  TokenStream& ts_;
  const StrategyFile* base_;
  const StrategyFile* local_;
};

}  // namespace

StrategyFile parse_strategy_file(std::string_view text,
                                 const StrategyFile* base) {
  TokenStream ts(tokenize(text));
  StrategyFile file;
  StrategyParser p(ts, base, &file);
  while (!ts.at_end()) {
    if (!ts.peek().is_ident("strategy"))
      ts.fail("expected 'strategy', found " + describe(ts.peek()));
    ts.next();
    const Token& at = ts.peek();
    std::string name = ts.expect_ident("strategy name");
    if (reserved(name))
      TokenStream::fail_at(at, "'" + name + "' is a reserved name");
    if (file.find(name) || (base && base->find(name)))
      TokenStream::fail_at(at, "duplicate strategy '" + name + "'");
    ts.expect_symbol("=");
    Strategy body = p.expr();
    file.defs.push_back({std::move(name), std::move(body)});
  }
  return file;
}

Strategy parse_strategy(std::string_view text, const StrategyFile& env) {
  TokenStream ts(tokenize(text));
  StrategyParser p(ts, &env, nullptr);
  Strategy s = p.expr();
  if (!ts.at_end()) ts.fail("trailing input " + describe(ts.peek()));
  return s;
}

StrategyFile load_strategy_file(const std::string& path,
                                const StrategyFile* base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_strategy_file(buf.str(), base);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

// ---- core ------------------------------------------------------------------

namespace {

CorePtr make_core(Core::Kind k, std::vector<CorePtr> subs) {
  auto c = std::make_shared<Core>();
  c->kind = k;
  c->subs = std::move(subs);
  return c;
}

}  // namespace

CorePtr core_atom(AtomDescriptor atom) {
  auto c = std::make_shared<Core>();
  c->kind = Core::Kind::kAtom;
  c->atom = std::move(atom);
  return c;
}

CorePtr core_skip() {
  static const CorePtr skip = make_core(Core::Kind::kSkip, {});
  return skip;
}

CorePtr core_fail() {
  static const CorePtr fail = make_core(Core::Kind::kFail, {});
  return fail;
}

CorePtr core_then(CorePtr a, CorePtr b) {
  return make_core(Core::Kind::kThen, {std::move(a), std::move(b)});
}

CorePtr core_alt(CorePtr a, CorePtr b) {
  return make_core(Core::Kind::kAlt, {std::move(a), std::move(b)});
}

CorePtr core_or(CorePtr a, CorePtr b) {
  return make_core(Core::Kind::kOr, {std::move(a), std::move(b)});
}

CorePtr core_rep(CorePtr s) { return make_core(Core::Kind::kRep, {std::move(s)}); }

CorePtr core_repn(CorePtr s) {
  return make_core(Core::Kind::kRepN, {std::move(s)});
}

CorePtr core_comb(CombKind k, std::vector<CorePtr> subs, int cut) {
  auto c = std::make_shared<Core>();
  c->kind = Core::Kind::kComb;
  c->comb = k;
  c->cut = cut;
  c->subs = std::move(subs);
  return c;
}

std::string render(const Core& c) {
  auto join = [&](std::string head) {
    head += "(";
    for (std::size_t i = 0; i < c.subs.size(); ++i) {
      if (i) head += ", ";
      head += render(*c.subs[i]);
    }
    return head + ")";
  };
  switch (c.kind) {
    case Core::Kind::kAtom: return "Atom " + to_string(c.atom);
    case Core::Kind::kSkip: return "Skip";
    case Core::Kind::kFail: return "Fail";
    case Core::Kind::kThen: return join("Then");
    case Core::Kind::kAlt: return join("Alt");
    case Core::Kind::kOr: return join("Or");
    case Core::Kind::kRep: return join("Rep");
    case Core::Kind::kRepN: return join("RepN");
    case Core::Kind::kComb:
      switch (c.comb) {
        case CombKind::kCut: return join("Cut " + std::to_string(c.cut) + " ");
        case CombKind::kPOrs: return join("POrs");
        case CombKind::kPAlts: return join("PAlts");
        case CombKind::kPThenOne: return join("PThenOne");
        case CombKind::kPThenAll: return join("PThenAll");
      }
  }
  return "";
}

namespace {

class Desugarer {
 public:
  Desugarer(const StrategyFile& env, const std::set<std::string>& users)
      : env_(env), users_(users) {}

  CorePtr run(const Strategy& s) {
    using K = Strategy::Kind;
    switch (s.kind) {
      case K::kAtom:
        if (s.atom.kind == AtomKind::kUser && !users_.count(s.atom.user_name))
          throw DesugarError("unknown User tactic \"" + s.atom.user_name + "\"");
        return core_atom(s.atom);
      case K::kRef: return ref(s.ref);
      case K::kThens: return nest(s.subs, core_then);
      case K::kOrs: return nest(s.subs, core_or);
      case K::kAlts: return nest(s.subs, core_alt);
      case K::kRepeat: return core_rep(run(s.subs[0]));
      case K::kRepeatN: return core_repn(run(s.subs[0]));
      case K::kCut: return core_comb(CombKind::kCut, {run(s.subs[0])}, s.cut);
      case K::kPOrs: return parallel(CombKind::kPOrs, s.subs);
      case K::kPAlts: return parallel(CombKind::kPAlts, s.subs);
      case K::kPThenOne: return parallel(CombKind::kPThenOne, s.subs);
      case K::kPThenAll: return parallel(CombKind::kPThenAll, s.subs);
    }
    throw DesugarError("malformed strategy");
  }

 private:
  CorePtr ref(const std::string& name) {
    if (auto it = done_.find(name); it != done_.end()) return it->second;
    const Strategy* body = env_.find(name);
    if (!body) throw DesugarError("unresolved strategy '" + name + "'");
    if (!active_.insert(name).second)
      throw DesugarError("cyclic strategy '" + name + "'");
    CorePtr c = run(*body);
    active_.erase(name);
    return done_[name] = c;
  }

  template <typename F>
  CorePtr nest(const std::vector<Strategy>& items, F make) {
    CorePtr acc = run(items.back());
    for (std::size_t i = items.size() - 1; i-- > 0;) acc = make(run(items[i]), acc);
    return acc;
  }

  CorePtr parallel(CombKind k, const std::vector<Strategy>& items) {
    if (items.size() == 1 && (k == CombKind::kPOrs || k == CombKind::kPAlts))
      return run(items[0]);
    std::vector<CorePtr> subs;
    for (const auto& i : items) subs.push_back(run(i));
    return core_comb(k, std::move(subs));
  }

  const StrategyFile& env_;
  const std::set<std::string>& users_;
  std::map<std::string, CorePtr> done_;
  std::set<std::string> active_;
};

}  // namespace

CorePtr desugar(const Strategy& s, const StrategyFile& env,
                const std::set<std::string>& user_tactics) {
  return Desugarer(env, user_tactics).run(s);
}

}  // namespace psl
