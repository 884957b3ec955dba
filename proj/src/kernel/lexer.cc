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

#include "psl/lexer.h"

#include <cctype>
#include <utility>

namespace psl {

namespace {

// Longest first.
constexpr std::string_view kSymbols[] = {"==>", "-->", "(", ")", "[", "]",
                                         ",",   ":",   "=", "|", "&", "~"};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         c == '\'' || c == '.';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  bool fresh_line = true;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
        fresh_line = true;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (text.substr(i, 2) == "(*") {
      int l = line, cl = col;
      int nesting = 0;
      do {
        if (i >= text.size()) throw ParseError("unterminated comment", l, cl);
        if (text.substr(i, 2) == "(*") {
          ++nesting;
          advance(2);
        } else if (text.substr(i, 2) == "*)") {
          --nesting;
          advance(2);
        } else {
          advance(1);
        }
      } while (nesting > 0);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    tok.line_start = fresh_line;
    fresh_line = false;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      // A trailing dot belongs to the surrounding syntax, not the name.
      while (j > i + 1 && text[j - 1] == '.') --j;
      tok.kind = Token::Kind::kIdent;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      tok.kind = Token::Kind::kInt;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '"')
        throw ParseError("unterminated string literal", line, col);
      tok.kind = Token::Kind::kString;
      tok.text = std::string(text.substr(i + 1, j - i - 1));
      advance(j + 1 - i);
    } else {
      bool found = false;
      for (auto sym : kSymbols) {
        if (text.substr(i, sym.size()) == sym) {
          tok.kind = Token::Kind::kSymbol;
          tok.text = std::string(sym);
          advance(sym.size());
          found = true;
          break;
        }
      }
      if (!found)
        throw ParseError(std::string("unexpected character '") + c + "'", line,
                         col);
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.line = line;
  end.column = col;
  end.line_start = true;
  out.push_back(end);
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::kEnd: return "end of input";
    case Token::Kind::kString: return "string \"" + t.text + "\"";
    default: return "'" + t.text + "'";
  }
}

TokenStream::TokenStream(std::vector<Token> tokens)
    : tokens_(std::move(tokens)) {
  if (tokens_.empty() || tokens_.back().kind != Token::Kind::kEnd)
    tokens_.push_back(Token{});
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t k = pos_ + ahead;
  return k < tokens_.size() ? tokens_[k] : tokens_.back();
}

const Token& TokenStream::next() {
  const Token& t = peek();
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenStream::accept_symbol(std::string_view s) {
  if (!peek().is_symbol(s)) return false;
  next();
  return true;
}

void TokenStream::expect_symbol(std::string_view s) {
  if (!accept_symbol(s))
    fail("expected '" + std::string(s) + "', found " + describe(peek()));
}

std::string TokenStream::expect_ident(const char* what) {
  if (peek().kind != Token::Kind::kIdent)
    fail(std::string("expected ") + what + ", found " + describe(peek()));
  return next().text;
}

int TokenStream::expect_int() {
  if (peek().kind != Token::Kind::kInt)
    fail("expected integer, found " + describe(peek()));
  const Token& t = next();
  try {
    return std::stoi(t.text);
  } catch (const std::out_of_range&) {
    fail_at(t, "integer out of range");
  }
}

void TokenStream::fail(const std::string& message) const {
  fail_at(peek(), message);
}

void TokenStream::fail_at(const Token& t, const std::string& message) {
  throw ParseError(message, t.line, t.column);
}

}  // namespace psl
