#include "tptl/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "lexer.hpp"

namespace tptl {

namespace {

std::string format_error(std::size_t line, std::size_t column,
                         const std::vector<std::string>& expected, const std::string& found,
                         const std::string& detail) {
  std::string msg = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
  if (!detail.empty()) {
    msg += detail;
    msg += "; ";
  }
  if (!expected.empty()) {
    msg += "expected ";
    if (expected.size() > 1) msg += "one of ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += ", ";
      msg += expected[i];
    }
    msg += ", ";
  }
  msg += "found " + found;
  return msg;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       std::string found, std::string detail)
    : std::runtime_error(format_error(line, column, expected, found, detail)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

Tok keyword(std::string_view word) {
  if (word == "true") return Tok::True;
  if (word == "false") return Tok::False;
  if (word == "X") return Tok::Next;
  if (word == "F") return Tok::Eventually;
  if (word == "G") return Tok::Always;
  if (word == "U") return Tok::Until;
  if (word == "R") return Tok::Release;
  return Tok::Ident;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t line_start = 0;

  auto fail = [&](std::size_t at, const std::string& what) {
    std::string found = at < text.size() ? "'" + std::string(1, text[at]) + "'" : "end of input";
    throw ParseError(line, at - line_start + 1, {}, found, what);
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++i;
      ++line;
      line_start = i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = i - line_start + 1;
    std::size_t start = i;
    auto two = [&](char second) { return i + 1 < text.size() && text[i + 1] == second; };

    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) ++i;
      tok.text = std::string(text.substr(start, i - start));
      tok.kind = keyword(tok.text);
    } else if (digit(c)) {
      while (i < text.size() && digit(text[i])) ++i;
      if (i < text.size() && text[i] == '.' && i + 1 < text.size() && digit(text[i + 1])) {
        ++i;
        while (i < text.size() && digit(text[i])) ++i;
      }
      if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
        if (j < text.size() && digit(text[j])) {
          i = j;
          while (i < text.size() && digit(text[i])) ++i;
        }
      }
      tok.kind = Tok::Number;
      tok.text = std::string(text.substr(start, i - start));
      auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(),
                                       tok.number);
      if (ec != std::errc{} || !std::isfinite(tok.number)) fail(start, "number out of range");
    } else if (c == '/' && two('\\')) {
      tok.kind = Tok::And;
      i += 2;
    } else if (c == '\\' && two('/')) {
      tok.kind = Tok::Or;
      i += 2;
    } else if (c == '-' && two('>')) {
      tok.kind = Tok::Implies;
      i += 2;
    } else if (c == '<' && two('>')) {
      tok.kind = Tok::Eventually;
      i += 2;
    } else if (c == '[' && two(']')) {
      tok.kind = Tok::Always;
      i += 2;
    } else if (c == '<' && two('=')) {
      tok.kind = Tok::Cmp;
      tok.rel = Relation::Le;
      i += 2;
    } else if (c == '>' && two('=')) {
      tok.kind = Tok::Cmp;
      tok.rel = Relation::Ge;
      i += 2;
    } else {
      ++i;
      switch (c) {
        case '!':
        case '~': tok.kind = Tok::Not; break;
        case '&': tok.kind = Tok::And; break;
        case '|': tok.kind = Tok::Or; break;
        case '.': tok.kind = Tok::Dot; break;
        case '(': tok.kind = Tok::LParen; break;
        case ')': tok.kind = Tok::RParen; break;
        case '[': tok.kind = Tok::LBracket; break;
        case ']': tok.kind = Tok::RBracket; break;
        case ',': tok.kind = Tok::Comma; break;
        case '-': tok.kind = Tok::Minus; break;
        case '<': tok.kind = Tok::Cmp; tok.rel = Relation::Lt; break;
        case '>': tok.kind = Tok::Cmp; tok.rel = Relation::Gt; break;
        case '=': tok.kind = Tok::Cmp; tok.rel = Relation::Eq; break;
        default: fail(start, "unexpected character");
      }
    }
    if (tok.text.empty()) tok.text = std::string(text.substr(start, i - start));
    out.push_back(std::move(tok));
  }

  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.column = text.size() - line_start + 1;
  out.push_back(end);
  return out;
}

std::string describe(const Token& token) {
  if (token.kind == Tok::End) return "end of input";
  return "'" + token.text + "'";
}

}  // namespace detail

namespace {

using detail::Tok;
using detail::TokenStream;

const std::vector<std::string> kUnaryStart = {
    "'!'", "'X'", "'F'", "'G'", "'('", "'true'", "'false'", "identifier"};

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : in_(text) {}

  Formula run() {
    Formula f = implies();
    if (!in_.at(Tok::End)) {
      in_.fail({"'->'", "'\\/'", "'/\\'", "'U'", "'R'", "end of input"});
    }
    return f;
  }

 private:
  Formula implies() {
    Formula lhs = disjunction();
    if (in_.accept(Tok::Implies)) return Formula::implication(lhs, implies());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (in_.accept(Tok::Or)) f = Formula::disjunction(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = until();
    while (in_.accept(Tok::And)) f = Formula::conjunction(f, until());
    return f;
  }

  Formula until() {
    Formula lhs = unary();
    if (in_.accept(Tok::Until)) return Formula::until(lhs, until());
    if (in_.accept(Tok::Release)) return Formula::release(lhs, until());
    return lhs;
  }

  Formula unary() {
    switch (in_.peek().kind) {
      case Tok::Not: in_.advance(); return Formula::negation(unary());
      case Tok::Next: in_.advance(); return Formula::next(unary());
      case Tok::Eventually: in_.advance(); return Formula::eventually(unary());
      case Tok::Always: in_.advance(); return Formula::always(unary());
      case Tok::Ident:
        if (in_.peek(1).kind == Tok::Dot) {
          std::string var = in_.advance().text;
          in_.advance();
          return Formula::freeze(std::move(var), unary());
        }
        return atom();
      default:
        return atom();
    }
  }

  Formula atom() {
    const auto& t = in_.peek();
    switch (t.kind) {
      case Tok::True: in_.advance(); return Formula::top();
      case Tok::False: in_.advance(); return Formula::bottom();
      case Tok::LParen: {
        in_.advance();
        Formula f = implies();
        in_.expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident: {
        std::string name = in_.advance().text;
        if (!in_.at(Tok::Cmp)) return Formula::prop(std::move(name));
        Relation rel = in_.advance().rel;
        if (in_.at(Tok::Minus)) in_.fail({"number"}, "negative constraint bound");
        if (in_.at(Tok::Ident)) {
          in_.fail({"number"}, "constraints compare one variable against a constant");
        }
        double bound = in_.expect(Tok::Number, "number").number;
        return Formula::constraint(std::move(name), rel, bound);
      }
      default:
        in_.fail(kUnaryStart);
    }
  }

  TokenStream in_;
};

}  // namespace

Formula parse(std::string_view text) { return FormulaParser(text).run(); }

}  // namespace tptl
