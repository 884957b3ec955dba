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

// Tokenizer shared by the theory, strategy and script readers. `(* *)`
// comments nest and are skipped.

#ifndef PSL_LEXER_H_
#define PSL_LEXER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "psl/kernel.h"

namespace psl {

struct Token {
  enum class Kind { kIdent, kInt, kString, kSymbol, kEnd };

  Kind kind = Kind::kEnd;
  std::string text;  // string literals without quotes
  int line = 1;
  int column = 1;
  bool line_start = false;  // first token on its line

  bool is_symbol(std::string_view s) const {
    return kind == Kind::kSymbol && text == s;
  }
  bool is_ident(std::string_view s) const {
    return kind == Kind::kIdent && text == s;
  }
};

// Identifiers are [A-Za-z_][A-Za-z0-9_'.]*. Throws ParseError on stray
// characters, unterminated strings and comments.
std::vector<Token> tokenize(std::string_view text);

// Cursor over a token vector; the last token is always kEnd.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens);

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == Token::Kind::kEnd; }

  bool accept_symbol(std::string_view s);
  void expect_symbol(std::string_view s);
  std::string expect_ident(const char* what);
  int expect_int();

  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] static void fail_at(const Token& t, const std::string& message);

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string describe(const Token& t);

}  // namespace psl

#endif  // PSL_LEXER_H_
