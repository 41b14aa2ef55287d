#pragma once

// Tokenizer shared by the TPTL and MTL parsers.

#include <string>
#include <string_view>
#include <vector>

#include "tptl/formula.hpp"
#include "tptl/parser.hpp"

namespace tptl::detail {

enum class Tok {
  Ident,
  Number,
  True,
  False,
  Not,
  Next,
  Eventually,
  Always,
  Until,
  Release,
  And,
  Or,
  Implies,
  Dot,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Cmp,
  Minus,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Relation rel = Relation::Le;  // Cmp only
  double number = 0.0;          // Number only
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view text);

std::string describe(const Token& token);

/// Cursor over a token vector with error helpers.
class TokenStream {
 public:
  explicit TokenStream(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (!at(kind)) return false;
    advance();
    return true;
  }
  const Token& expect(Tok kind, const char* what) {
    if (!at(kind)) fail({what});
    return advance();
  }
  [[noreturn]] void fail(std::vector<std::string> expected, std::string detail = {}) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, std::move(expected), describe(t), std::move(detail));
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace tptl::detail
