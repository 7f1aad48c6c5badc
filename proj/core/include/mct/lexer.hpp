#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mct/lang.hpp"

namespace mct {

enum class TokenKind {
  Identifier,
  Keyword,
  IntLit,
  FloatLit,
  StrLit,
  CharLit,
  BoolLit,
  RegexLit,
  Lifetime,
  Operator,
  Punct,
  Comment,
  Directive,
};

struct Token {
  TokenKind kind;
  std::size_t begin;  // byte offset of first character
  std::size_t end;    // one past the last character
  std::size_t line;   // 1-based line of `begin`
  std::size_t col;    // 1-based byte column of `begin`
};

struct LexResult {
  std::vector<Token> tokens;  // in source order, comments included
  std::vector<std::string> errors;

  bool ok() const { return errors.empty(); }
};

/// Tokenizes `code` under the lexical rules of `lang`. Never throws; lexical
/// problems (unterminated strings, stray characters) are reported in
/// LexResult::errors and tokenization continues past them where possible.
LexResult lex(std::string_view code, Language lang);

inline std::string_view token_text(std::string_view code, const Token& tok) {
  return code.substr(tok.begin, tok.end - tok.begin);
}

/// True for tokens that count as code: everything except comments.
inline bool is_code_token(const Token& tok) {
  return tok.kind != TokenKind::Comment;
}

}  // namespace mct
