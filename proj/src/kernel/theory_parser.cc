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

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "kernel/type_unifier.h"
#include "psl/evaluate.h"
#include "psl/lexer.h"
#include "psl/rewrite.h"
#include "psl/theory.h"

namespace psl {

const Goal* Theory::find_goal(const std::string& label) const {
  for (const auto& g : goals)
    if (g.label == label) return &g;
  return nullptr;
}

namespace {

const std::set<std::string> kKeywords = {"datatype", "fun", "lemma", "goal",
                                         "True", "False"};

bool is_keyword(const Token& t) {
  return t.kind == Token::Kind::kIdent && kKeywords.count(t.text);
}

// The function whose equations are being read: calls to it are allowed
// before it is registered.
struct PendingFunction {
  std::string name;
  std::optional<std::size_t> arity;
};

class Parser {
 public:
  Parser(TokenStream& ts, Context& ctx) : ts_(ts), ctx_(ctx) {}

  void theory(std::vector<Goal>& goals) {
    while (!ts_.at_end()) {
      const Token& t = ts_.peek();
      if (t.is_ident("datatype")) {
        datatype();
      } else if (t.is_ident("fun")) {
        function();
      } else if (t.is_ident("lemma")) {
        lemma();
      } else if (t.is_ident("goal")) {
        ts_.next();
        const Token& at = ts_.peek();
        std::string label = label_name();
        ts_.expect_symbol(":");
        if (declared_goals_.count(label))
          TokenStream::fail_at(at, "duplicate goal '" + label + "'");
        declared_goals_.insert(label);
        Goal g = statement(at);
        g.label = label;
        goals.push_back(std::move(g));
      } else {
        ts_.fail("expected 'datatype', 'fun', 'lemma' or 'goal', found " +
                 describe(t));
      }
    }
  }

  Goal statement(const Token& at) {
    Goal g;
    std::vector<Formula> parts{formula()};
    while (ts_.accept_symbol("==>")) parts.push_back(formula());
    g.concl = std::move(parts.back());
    parts.pop_back();
    g.hyps = std::move(parts);
    if (!ctx_.well_typed(g)) TokenStream::fail_at(at, "ill-typed statement");
    return g;
  }

  Term term() {
    const Token& at = ts_.peek();
    if (at.kind != Token::Kind::kIdent || is_keyword(at)) return atomic_term();
    std::string head = ts_.next().text;
    std::vector<Term> args;
    while (starts_atomic()) args.push_back(atomic_term());
    return make_term(at, head, std::move(args));
  }

 private:
  bool starts_atomic() const {
    const Token& t = ts_.peek();
    return (t.kind == Token::Kind::kIdent && !is_keyword(t)) ||
           t.is_symbol("(");
  }

  std::string label_name() {
    if (is_keyword(ts_.peek()))
      ts_.fail("keyword " + describe(ts_.peek()) + " used as a name");
    return ts_.expect_ident("name");
  }

  // ---- datatypes --------------------------------------------------------

  void datatype() {
    ts_.next();
    const Token& at = ts_.peek();
    Datatype dt;
    dt.name = label_name();
    if (ctx_.find_datatype(dt.name))
      TokenStream::fail_at(at, "duplicate datatype '" + dt.name + "'");
    ts_.expect_symbol("=");
    do {
      const Token& ct = ts_.peek();
      Constructor c;
      c.name = label_name();
      if (ctx_.find_ctor(c.name) || ctx_.find_function(c.name) ||
          std::any_of(dt.ctors.begin(), dt.ctors.end(),
                      [&](const Constructor& o) { return o.name == c.name; }))
        TokenStream::fail_at(ct, "duplicate constructor '" + c.name + "'");
      while (ts_.peek().kind == Token::Kind::kIdent && !is_keyword(ts_.peek())) {
        const Token& tt = ts_.peek();
        std::string ty = ts_.next().text;
        if (ty != dt.name && !ctx_.find_datatype(ty))
          TokenStream::fail_at(tt, "unknown type '" + ty + "'");
        c.arg_types.push_back(ty);
      }
      dt.ctors.push_back(std::move(c));
    } while (ts_.accept_symbol("|"));
    bool has_base = std::any_of(
        dt.ctors.begin(), dt.ctors.end(), [&](const Constructor& c) {
          return std::find(c.arg_types.begin(), c.arg_types.end(), dt.name) ==
                 c.arg_types.end();
        });
    if (!has_base)
      TokenStream::fail_at(at, "datatype '" + dt.name + "' has no base case");
    std::string name = dt.name;
    ctx_.add_datatype(std::move(dt));
    ctx_.add_induct_rule({name + ".induct", InductRule::Kind::kDatatype, name});
  }

  // ---- functions --------------------------------------------------------

  struct Equation {
    Token at;
    std::vector<Term> patterns;
    Term rhs;
  };

  void function() {
    const Token& first = ts_.peek(1);
    std::string name = first.text;
    if (first.kind != Token::Kind::kIdent || is_keyword(first))
      TokenStream::fail_at(first, "expected function name");
    if (ctx_.find_function(name) || ctx_.find_ctor(name) ||
        ctx_.find_datatype(name))
      TokenStream::fail_at(first, "duplicate definition of '" + name + "'");
    pending_ = PendingFunction{name, std::nullopt};
    std::vector<Equation> eqs;
    while (ts_.peek().is_ident("fun") && ts_.peek(1).is_ident(name))
      eqs.push_back(equation());
    pending_.reset();

    FunctionDef fn;
    fn.name = name;
    infer_signature(fn, eqs);
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      Term lhs = to_schematic(Term::app(name, eqs[i].patterns));
      fn.equations.push_back(
          {name + "." + std::to_string(i + 1), lhs, to_schematic(eqs[i].rhs)});
    }
    bool exhaustive = equations_exhaustive(fn, ctx_);
    ctx_.add_function(std::move(fn));
    if (exhaustive)
      ctx_.add_induct_rule({name + ".induct", InductRule::Kind::kFunction, name});
  }

  Equation equation() {
    ts_.next();  // fun
    Equation eq;
    eq.at = ts_.next();
    std::set<std::string> bound;
    while (!ts_.peek().is_symbol("=")) {
      if (!starts_atomic())
        ts_.fail("expected pattern or '=', found " + describe(ts_.peek()));
      eq.patterns.push_back(atomic_pattern(bound));
    }
    if (pending_->arity && *pending_->arity != eq.patterns.size())
      TokenStream::fail_at(eq.at, "equation for '" + pending_->name + "' has " +
                                      std::to_string(eq.patterns.size()) +
                                      " arguments, expected " +
                                      std::to_string(*pending_->arity));
    pending_->arity = eq.patterns.size();
    ts_.expect_symbol("=");
    const Token& rt = ts_.peek();
    eq.rhs = term();
    std::vector<std::string> vars;
    collect_vars(eq.rhs, vars);
    for (const auto& v : vars)
      if (!bound.count(v))
        TokenStream::fail_at(rt, "unbound variable '" + v + "' in equation");
    return eq;
  }

  Term atomic_pattern(std::set<std::string>& bound) {
    if (ts_.accept_symbol("(")) {
      const Token& at = ts_.peek();
      std::string head = ts_.expect_ident("constructor");
      std::vector<Term> args;
      while (!ts_.peek().is_symbol(")")) {
        if (!starts_atomic())
          ts_.fail("expected pattern or ')', found " + describe(ts_.peek()));
        args.push_back(atomic_pattern(bound));
      }
      ts_.expect_symbol(")");
      if (args.empty() && !ctx_.find_ctor(head)) return pattern_var(at, head, bound);
      return pattern_ctor(at, head, std::move(args));
    }
    const Token& at = ts_.peek();
    std::string name = ts_.expect_ident("pattern");
    if (ctx_.find_ctor(name)) return pattern_ctor(at, name, {});
    return pattern_var(at, name, bound);
  }

  Term pattern_ctor(const Token& at, const std::string& name,
                    std::vector<Term> args) {
    const Constructor* c = ctx_.find_ctor(name);
    if (!c) TokenStream::fail_at(at, "'" + name + "' is not a constructor");
    check_arity(at, name, c->arg_types.size(), args.size());
    return Term::ctor(name, std::move(args));
  }

  Term pattern_var(const Token& at, const std::string& name,
                   std::set<std::string>& bound) {
    if (ctx_.find_function(name) || name == pending_->name)
      TokenStream::fail_at(at, "function '" + name + "' in pattern");
    if (!bound.insert(name).second)
      TokenStream::fail_at(at, "variable '" + name + "' repeated in pattern");
    return Term::var(name);
  }

  void infer_signature(FunctionDef& fn, const std::vector<Equation>& eqs) {
    TypeUnifier u;
    std::vector<int> slots;
    for (std::size_t i = 0; i < eqs.front().patterns.size(); ++i)
      slots.push_back(u.fresh());
    int result = u.fresh();
    for (const auto& eq : eqs) {
      std::map<std::string, int> vars;
      try {
        for (std::size_t i = 0; i < eq.patterns.size(); ++i)
          u.unify(slots[i], infer(eq.patterns[i], fn.name, slots, result, u, vars));
        u.unify(result, infer(eq.rhs, fn.name, slots, result, u, vars));
      } catch (const TypeMismatch& e) {
        TokenStream::fail_at(eq.at, e.what());
      }
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
      auto t = u.resolve(slots[i]);
      if (!t)
        TokenStream::fail_at(eqs.front().at,
                             "cannot infer type of argument " +
                                 std::to_string(i + 1) + " of '" + fn.name + "'");
      fn.arg_types.push_back(*t);
    }
    auto r = u.resolve(result);
    if (!r)
      TokenStream::fail_at(eqs.front().at,
                           "cannot infer result type of '" + fn.name + "'");
    fn.result_type = *r;
  }

  int infer(const Term& t, const std::string& self, const std::vector<int>& slots,
            int result, TypeUnifier& u, std::map<std::string, int>& vars) {
    if (t.is_var()) {
      auto it = vars.find(t.name);
      if (it != vars.end()) return it->second;
      int v = u.fresh();
      vars.emplace(t.name, v);
      return v;
    }
    if (t.is_ctor()) {
      const Constructor* c = ctx_.find_ctor(t.name);
      for (std::size_t i = 0; i < t.args.size(); ++i)
        u.unify(infer(t.args[i], self, slots, result, u, vars),
                u.named(c->arg_types[i]));
      return u.named(ctx_.datatype_of_ctor(t.name)->name);
    }
    if (t.name == self) {
      for (std::size_t i = 0; i < t.args.size(); ++i)
        u.unify(infer(t.args[i], self, slots, result, u, vars), slots[i]);
      return result;
    }
    const FunctionDef* fn = ctx_.find_function(t.name);
    for (std::size_t i = 0; i < t.args.size(); ++i)
      u.unify(infer(t.args[i], self, slots, result, u, vars),
              u.named(fn->arg_types[i]));
    return u.named(fn->result_type);
  }

  // ---- lemmas -----------------------------------------------------------

  void lemma() {
    ts_.next();
    Lemma lem;
    if (ts_.accept_symbol("[")) {
      do {
        const Token& at = ts_.peek();
        std::string a = ts_.expect_ident("attribute");
        if (a == "simp") {
          lem.attrs.insert(LemmaAttr::kSimp);
        } else if (a == "intro") {
          lem.attrs.insert(LemmaAttr::kIntro);
        } else if (a == "elim") {
          lem.attrs.insert(LemmaAttr::kElim);
        } else if (a == "induct") {
          TokenStream::fail_at(
              at, "induction rules are derived from datatypes and functions");
        } else {
          TokenStream::fail_at(at, "unknown attribute '" + a + "'");
        }
      } while (ts_.accept_symbol(","));
      ts_.expect_symbol("]");
    }
    const Token& at = ts_.peek();
    lem.label = label_name();
    if (ctx_.find_lemma(lem.label))
      TokenStream::fail_at(at, "duplicate lemma '" + lem.label + "'");
    ts_.expect_symbol(":");
    Goal g = statement(at);
    lem.premises = std::move(g.hyps);
    lem.concl = std::move(g.concl);
    ctx_.add_lemma(std::move(lem));
  }

  // ---- formulas ---------------------------------------------------------

 public:
  Formula formula() {
    Formula lhs = disjunction();
    if (ts_.accept_symbol("-->")) return Formula::implies(lhs, formula());
    return lhs;
  }

 private:
  Formula disjunction() {
    Formula lhs = conjunction();
    if (ts_.accept_symbol("|")) return Formula::disj(lhs, disjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = negation();
    if (ts_.accept_symbol("&")) return Formula::conj(lhs, conjunction());
    return lhs;
  }

  Formula negation() {
    if (ts_.accept_symbol("~")) return Formula::negate(negation());
    return primary();
  }

  Formula primary() {
    const Token& t = ts_.peek();
    if (t.is_ident("True")) {
      ts_.next();
      return Formula::truth();
    }
    if (t.is_ident("False")) {
      ts_.next();
      return Formula::falsity();
    }
    if (t.is_symbol("(")) {
      std::size_t save = ts_.position();
      try {
        ts_.next();
        Formula f = formula();
        ts_.expect_symbol(")");
        if (!ts_.peek().is_symbol("=")) return f;
      } catch (const ParseError&) {
      }
      ts_.rewind(save);
      return equation_formula(term());
    }
    if (t.kind != Token::Kind::kIdent)
      ts_.fail("expected formula, found " + describe(t));
    const Token& at = ts_.next();
    std::vector<Term> args;
    while (starts_atomic()) args.push_back(atomic_term());
    if (ts_.peek().is_symbol("="))
      return equation_formula(make_term(at, at.text, std::move(args)));
    if (is_symbol_name(at.text))
      ts_.fail("expected '=' after term, found " + describe(ts_.peek()));
    return Formula::atom(at.text, std::move(args));
  }

  Formula equation_formula(Term lhs) {
    ts_.expect_symbol("=");
    return Formula::eq(std::move(lhs), term());
  }

  // ---- terms ------------------------------------------------------------

  bool is_symbol_name(const std::string& name) const {
    return ctx_.find_ctor(name) || ctx_.find_function(name) ||
           (pending_ && pending_->name == name);
  }

  Term atomic_term() {
    if (ts_.accept_symbol("(")) {
      Term t = term();
      ts_.expect_symbol(")");
      return t;
    }
    const Token& at = ts_.peek();
    if (is_keyword(at)) ts_.fail("expected term, found " + describe(at));
    std::string name = ts_.expect_ident("term");
    return make_term(at, name, {});
  }

  void check_arity(const Token& at, const std::string& name, std::size_t want,
                   std::size_t got) {
    if (want != got)
      TokenStream::fail_at(at, "'" + name + "' expects " + std::to_string(want) +
                                   " arguments, got " + std::to_string(got));
  }

  Term make_term(const Token& at, const std::string& name,
                 std::vector<Term> args) {
    if (const Constructor* c = ctx_.find_ctor(name)) {
      check_arity(at, name, c->arg_types.size(), args.size());
      return Term::ctor(name, std::move(args));
    }
    if (const FunctionDef* fn = ctx_.find_function(name)) {
      check_arity(at, name, fn->arg_types.size(), args.size());
      return Term::app(name, std::move(args));
    }
    if (pending_ && pending_->name == name) {
      if (pending_->arity) check_arity(at, name, *pending_->arity, args.size());
      return Term::app(name, std::move(args));
    }
    if (!args.empty())
      TokenStream::fail_at(at, "unknown function '" + name + "'");
    return Term::var(name);
  }

  TokenStream& ts_;
  Context& ctx_;
  std::optional<PendingFunction> pending_;
  std::set<std::string> declared_goals_;
};

int pattern_height(const Term& t) {
  int h = 0;
  for (const auto& a : t.args) h = std::max(h, pattern_height(a));
  return h + 1;
}

}  // namespace

Theory parse_theory(std::string_view text) {
  auto ctx = std::make_shared<Context>();
  TokenStream ts(tokenize(text));
  Theory th;
  Parser(ts, *ctx).theory(th.goals);
  th.context = std::move(ctx);
  return th;
}

Theory load_theory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_theory(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

Goal parse_goal(std::string_view text, const Context& ctx,
                const std::string& label) {
  Context copy = ctx;
  TokenStream ts(tokenize(text));
  Parser p(ts, copy);
  Goal g = p.statement(ts.peek());
  if (!ts.at_end()) ts.fail("trailing input " + describe(ts.peek()));
  g.label = label;
  return g;
}

Term parse_term(std::string_view text, const Context& ctx) {
  Context copy = ctx;
  TokenStream ts(tokenize(text));
  Parser p(ts, copy);
  Term t = p.term();
  if (!ts.at_end()) ts.fail("trailing input " + describe(ts.peek()));
  return t;
}

bool equations_exhaustive(const FunctionDef& fn, const Context& ctx) {
  int depth = 1;
  for (const auto& eq : fn.equations)
    for (const auto& p : eq.lhs.args) depth = std::max(depth, pattern_height(p));
  std::vector<std::vector<Term>> domains;
  std::size_t total = 1;
  for (const auto& ty : fn.arg_types) {
    domains.push_back(ground_terms(ctx, ty, depth + 1));
    if (domains.back().empty()) return false;
    total *= domains.back().size();
    if (total > 200000) return false;
  }
  std::vector<std::size_t> idx(domains.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<Term> args;
    std::size_t rest = n;
    for (std::size_t i = domains.size(); i-- > 0;) {
      args.push_back(domains[i][rest % domains[i].size()]);
      rest /= domains[i].size();
    }
    std::reverse(args.begin(), args.end());
    Term call = Term::app(fn.name, std::move(args));
    bool covered = std::any_of(
        fn.equations.begin(), fn.equations.end(), [&](const RewriteRule& eq) {
          Substitution s;
          return match(eq.lhs, call, s);
        });
    if (!covered) return false;
  }
  return true;
}

}  // namespace psl
