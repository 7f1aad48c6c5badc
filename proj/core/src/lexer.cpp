#include "mct/lexer.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace mct {

namespace {

using StrSet = std::unordered_set<std::string_view>;

const StrSet kPythonKeywords = {
    "False",  "None",   "True",    "and",    "as",     "assert", "async",
    "await",  "break",  "class",   "continue", "def",  "del",    "elif",
    "else",   "except", "finally", "for",    "from",   "global", "if",
    "import", "in",     "is",      "lambda", "nonlocal", "not",  "or",
    "pass",   "raise",  "return",  "try",    "while",  "with",   "yield",
    "match",  "case"};

const StrSet kCppKeywords = {
    "alignas",   "alignof",   "and",        "and_eq",   "asm",
    "auto",      "bitand",    "bitor",      "bool",     "break",
    "case",      "catch",     "char",       "char16_t", "char32_t",
    "char8_t",   "class",     "compl",      "const",    "consteval",
    "constexpr", "constinit", "const_cast", "continue", "co_await",
    "co_return", "co_yield",  "decltype",   "default",  "delete",
    "do",        "double",    "dynamic_cast", "else",   "enum",
    "explicit",  "export",    "extern",     "false",    "float",
    "for",       "friend",    "goto",       "if",       "inline",
    "int",       "long",      "mutable",    "namespace", "new",
    "noexcept",  "not",       "not_eq",     "nullptr",  "operator",
    "or",        "or_eq",     "private",    "protected", "public",
    "register",  "reinterpret_cast", "requires", "return", "short",
    "signed",    "sizeof",    "static",     "static_assert",
    "static_cast", "struct",  "switch",     "template", "this",
    "thread_local", "throw",  "true",       "try",      "typedef",
    "typeid",    "typename",  "union",      "unsigned", "using",
    "virtual",   "void",      "volatile",   "wchar_t",  "while",
    "xor",       "xor_eq"};

const StrSet kJavaKeywords = {
    "abstract", "assert",    "boolean",  "break",      "byte",
    "case",     "catch",     "char",     "class",      "const",
    "continue", "default",   "do",       "double",     "else",
    "enum",     "extends",   "final",    "finally",    "float",
    "for",      "goto",      "if",       "implements", "import",
    "instanceof", "int",     "interface", "long",      "native",
    "new",      "null",      "package",  "private",    "protected",
    "public",   "return",    "short",    "static",     "strictfp",
    "super",    "switch",    "synchronized", "this",   "throw",
    "throws",   "transient", "true",     "false",      "try",
    "var",      "void",      "volatile", "while",      "record",
    "yield",    "sealed",    "permits"};

const StrSet kGoKeywords = {
    "break",  "case",   "chan",    "const",       "continue", "default",
    "defer",  "else",   "fallthrough", "for",     "func",     "go",
    "goto",   "if",     "import",  "interface",   "map",      "package",
    "range",  "return", "select",  "struct",      "switch",   "type",
    "var",    "true",   "false"};

const StrSet kJsKeywords = {
    "await",  "break",   "case",   "catch",      "class",  "const",
    "continue", "debugger", "default", "delete", "do",     "else",
    "enum",   "export",  "extends", "false",     "finally", "for",
    "function", "if",    "import", "in",         "instanceof", "let",
    "new",    "null",    "of",     "return",     "static", "super",
    "switch", "this",    "throw",  "true",       "try",    "typeof",
    "var",    "void",    "while",  "with",       "yield",  "async"};

const StrSet kRustKeywords = {
    "as",    "async", "await", "break", "const",  "continue", "crate",
    "dyn",   "else",  "enum",  "extern", "false", "fn",       "for",
    "if",    "impl",  "in",    "let",   "loop",   "match",    "mod",
    "move",  "mut",   "pub",   "ref",   "return", "self",     "Self",
    "static", "struct", "super", "trait", "true", "type",     "unsafe",
    "use",   "where", "while"};

// Longest-first within each table so maximal munch is a linear scan.
const std::vector<std::string_view> kPythonOps = {
    "**=", "//=", "<<=", ">>=", "**", "//", "<<", ">>", "<=", ">=", "==",
    "!=",  "->",  ":=",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "@=",  "+",   "-",   "*",   "/",  "%",  "@",  "<",  ">",  "=",  "&",
    "|",   "^",   "~",   ".",   ",",  ":",  ";",  "(",  ")",  "[",  "]",
    "{",   "}"};

const std::vector<std::string_view> kCppOps = {
    "<<=", ">>=", "<=>", "...", "->*", "::", "->", "<<", ">>", "<=", ">=",
    "==",  "!=",  "&&",  "||",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=",
    "^=",  "++",  "--",  ".*",  "+",   "-",  "*",  "/",  "%",  "<",  ">",
    "=",   "&",   "|",   "^",   "~",   "!",  "?",  ":",  ".",  ",",  ";",
    "(",   ")",   "[",   "]",   "{",   "}"};

const std::vector<std::string_view> kJavaOps = {
    ">>>=", ">>>", "<<=", ">>=", "...", "->", "::", "<<", ">>", "<=", ">=",
    "==",   "!=",  "&&",  "||",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=",
    "^=",   "++",  "--",  "+",   "-",   "*",  "/",  "%",  "<",  ">",  "=",
    "&",    "|",   "^",   "~",   "!",   "?",  ":",  ".",  ",",  ";",  "@",
    "(",    ")",   "[",   "]",   "{",   "}"};

const std::vector<std::string_view> kGoOps = {
    "&^=", "<<=", ">>=", "...", "&^", "<-", ":=", "<<", ">>", "<=", ">=",
    "==",  "!=",  "&&",  "||",  "+=", "-=", "*=", "/=", "%=", "&=", "|=",
    "^=",  "++",  "--",  "+",   "-",  "*",  "/",  "%",  "<",  ">",  "=",
    "&",   "|",   "^",   "~",   "!",  ".",  ",",  ":",  ";",  "(",  ")",
    "[",   "]",   "{",   "}"};

const std::vector<std::string_view> kJsOps = {
    ">>>=", "===", "!==", "**=", "<<=", ">>=", "&&=", "||=", "??=", ">>>",
    "...",  "=>",  "?.",  "**",  "<<",  ">>",  "<=",  ">=",  "==",  "!=",
    "&&",   "||",  "??",  "+=",  "-=",  "*=",  "/=",  "%=",  "&=",  "|=",
    "^=",   "++",  "--",  "+",   "-",   "*",   "/",   "%",   "<",   ">",
    "=",    "&",   "|",   "^",   "~",   "!",   "?",   ":",   ".",   ",",
    ";",    "(",   ")",   "[",   "]",   "{",   "}"};

const std::vector<std::string_view> kRustOps = {
    "<<=", ">>=", "..=", "...", "::", "->", "=>", "..", "<<", ">>", "<=",
    ">=",  "==",  "!=",  "&&",  "||", "+=", "-=", "*=", "/=", "%=", "&=",
    "|=",  "^=",  "+",   "-",   "*",  "/",  "%",  "<",  ">",  "=",  "&",
    "|",   "^",   "!",   "?",   "@",  ".",  ",",  ":",  ";",  "#",  "(",
    ")",   "[",   "]",   "{",   "}"};

struct Profile {
  const StrSet* keywords;
  const std::vector<std::string_view>* operators;
  std::string_view bool_true;
  std::string_view bool_false;
  bool hash_line_comment = false;
  bool slash_comments = false;
  bool nested_block_comments = false;
  bool single_quote_strings = false;
  bool char_literals = false;
  bool rust_quote = false;  // char literal vs lifetime
  bool backtick_raw_string = false;
  bool backtick_template = false;
  bool triple_quote_strings = false;
  bool python_string_prefixes = false;
  bool rust_string_prefixes = false;
  bool hash_directive = false;
  bool backslash_joins_lines = false;
  bool regex_literals = false;
  bool dollar_in_ident = false;
  bool apostrophe_digit_sep = false;
  bool leading_dot_float = false;
};

Profile profile_for(Language lang) {
  Profile p;
  switch (lang) {
    case Language::Python:
      p.keywords = &kPythonKeywords;
      p.operators = &kPythonOps;
      p.bool_true = "True";
      p.bool_false = "False";
      p.hash_line_comment = true;
      p.single_quote_strings = true;
      p.triple_quote_strings = true;
      p.python_string_prefixes = true;
      p.backslash_joins_lines = true;
      p.leading_dot_float = true;
      break;
    case Language::Cpp:
      p.keywords = &kCppKeywords;
      p.operators = &kCppOps;
      p.bool_true = "true";
      p.bool_false = "false";
      p.slash_comments = true;
      p.char_literals = true;
      p.hash_directive = true;
      p.backslash_joins_lines = true;
      p.apostrophe_digit_sep = true;
      p.leading_dot_float = true;
      break;
    case Language::Java:
      p.keywords = &kJavaKeywords;
      p.operators = &kJavaOps;
      p.bool_true = "true";
      p.bool_false = "false";
      p.slash_comments = true;
      p.char_literals = true;
      p.triple_quote_strings = true;
      p.dollar_in_ident = true;
      p.leading_dot_float = true;
      break;
    case Language::Go:
      p.keywords = &kGoKeywords;
      p.operators = &kGoOps;
      p.bool_true = "true";
      p.bool_false = "false";
      p.slash_comments = true;
      p.char_literals = true;
      p.backtick_raw_string = true;
      p.leading_dot_float = true;
      break;
    case Language::JavaScript:
      p.keywords = &kJsKeywords;
      p.operators = &kJsOps;
      p.bool_true = "true";
      p.bool_false = "false";
      p.slash_comments = true;
      p.single_quote_strings = true;
      p.backtick_template = true;
      p.regex_literals = true;
      p.dollar_in_ident = true;
      p.leading_dot_float = true;
      break;
    case Language::Rust:
      p.keywords = &kRustKeywords;
      p.operators = &kRustOps;
      p.bool_true = "true";
      p.bool_false = "false";
      p.slash_comments = true;
      p.nested_block_comments = true;
      p.rust_quote = true;
      p.rust_string_prefixes = true;
      break;
  }
  return p;
}

bool ident_start(unsigned char c, const Profile& p) {
  return std::isalpha(c) || c == '_' || c >= 0x80 || (p.dollar_in_ident && c == '$');
}

bool ident_cont(unsigned char c, const Profile& p) {
  return std::isalnum(c) || c == '_' || c >= 0x80 || (p.dollar_in_ident && c == '$');
}

std::size_t utf8_len(unsigned char c) {
  if (c < 0x80) return 1;
  if ((c >> 5) == 0x6) return 2;
  if ((c >> 4) == 0xE) return 3;
  if ((c >> 3) == 0x1E) return 4;
  return 1;
}

class Lexer {
 public:
  Lexer(std::string_view code, Language lang)
      : code_(code), lang_(lang), p_(profile_for(lang)) {}

  LexResult run() {
    while (pos_ < code_.size()) {
      if (skip_whitespace()) continue;
      if (pos_ >= code_.size()) break;
      lex_token();
    }
    return std::move(result_);
  }

 private:
  char cur() const { return code_[pos_]; }
  char at(std::size_t i) const { return i < code_.size() ? code_[i] : '\0'; }
  bool starts_with(std::string_view s) const {
    return code_.compare(pos_, s.size(), s) == 0;
  }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < code_.size(); ++i) {
      if (code_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  // Returns true if any whitespace (including joined lines) was consumed.
  bool skip_whitespace() {
    bool any = false;
    while (pos_ < code_.size()) {
      char c = cur();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
          c == '\v') {
        advance();
        any = true;
      } else if (p_.backslash_joins_lines && c == '\\' &&
                 (at(pos_ + 1) == '\n' ||
                  (at(pos_ + 1) == '\r' && at(pos_ + 2) == '\n'))) {
        advance(at(pos_ + 1) == '\r' ? 3 : 2);
        any = true;
      } else {
        break;
      }
    }
    return any;
  }

  void emit(TokenKind kind, std::size_t begin, std::size_t begin_line,
            std::size_t begin_col) {
    result_.tokens.push_back(Token{kind, begin, pos_, begin_line, begin_col});
  }

  void error(std::size_t line, const std::string& msg) {
    result_.errors.push_back("line " + std::to_string(line) + ": " + msg);
  }

  void lex_token() {
    const std::size_t begin = pos_;
    const std::size_t bl = line_, bc = col_;
    char c = cur();

    // comments
    if (p_.hash_line_comment && c == '#') {
      while (pos_ < code_.size() && cur() != '\n') advance();
      emit(TokenKind::Comment, begin, bl, bc);
      return;
    }
    if (p_.slash_comments && c == '/' && at(pos_ + 1) == '/') {
      while (pos_ < code_.size() && cur() != '\n') advance();
      emit(TokenKind::Comment, begin, bl, bc);
      return;
    }
    if (p_.slash_comments && c == '/' && at(pos_ + 1) == '*') {
      advance(2);
      std::size_t depth = 1;
      while (pos_ < code_.size() && depth > 0) {
        if (starts_with("*/")) {
          --depth;
          advance(2);
        } else if (p_.nested_block_comments && starts_with("/*")) {
          ++depth;
          advance(2);
        } else {
          advance();
        }
      }
      if (depth > 0) error(bl, "unterminated block comment");
      emit(TokenKind::Comment, begin, bl, bc);
      return;
    }

    // preprocessor directive: '#' with only whitespace before it on the line
    if (p_.hash_directive && c == '#' && only_whitespace_before_on_line()) {
      while (pos_ < code_.size() && cur() != '\n') {
        if (cur() == '\\' && (at(pos_ + 1) == '\n' ||
                              (at(pos_ + 1) == '\r' && at(pos_ + 2) == '\n'))) {
          advance(at(pos_ + 1) == '\r' ? 3 : 2);
          continue;
        }
        advance();
      }
      emit(TokenKind::Directive, begin, bl, bc);
      return;
    }

    // strings, by language
    if (p_.python_string_prefixes && ident_start(c, p_)) {
      std::size_t look = pos_;
      while (look < code_.size() && look - pos_ < 3 &&
             std::isalpha(static_cast<unsigned char>(code_[look])))
        ++look;
      if (look > pos_ && look - pos_ <= 2 &&
          (at(look) == '"' || at(look) == '\'')) {
        std::string prefix(code_.substr(pos_, look - pos_));
        for (auto& ch : prefix) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        if (prefix.find_first_not_of("rbfu") == std::string::npos) {
          advance(look - pos_);
          lex_python_string(begin, bl, bc);
          return;
        }
      }
    }
    if (lang_ == Language::Python && (c == '"' || c == '\'')) {
      lex_python_string(begin, bl, bc);
      return;
    }
    if (p_.rust_string_prefixes &&
        (c == 'r' || c == 'b') ) {
      // r"..."  r#"..."#  b"..."  br#"..."#  b'x'
      std::size_t look = pos_;
      bool byte_prefix = false;
      if (code_[look] == 'b') {
        ++look;
        byte_prefix = true;
      }
      bool raw = look < code_.size() && code_[look] == 'r' &&
                 (at(look + 1) == '"' || at(look + 1) == '#');
      if (raw) ++look;
      if (raw && (at(look) == '"' || at(look) == '#')) {
        advance(look - pos_);
        lex_rust_raw_string(begin, bl, bc);
        return;
      }
      if (byte_prefix && at(look) == '"') {
        advance(look - pos_);
        lex_quoted('"', false, begin, bl, bc, TokenKind::StrLit);
        return;
      }
      if (byte_prefix && at(look) == '\'') {
        advance(look - pos_);
        lex_quoted('\'', false, begin, bl, bc, TokenKind::CharLit);
        return;
      }
    }
    if (lang_ != Language::Python && c == '"') {
      if (p_.triple_quote_strings && starts_with("\"\"\"")) {
        lex_triple('"', begin, bl, bc);
        return;
      }
      lex_quoted('"', false, begin, bl, bc, TokenKind::StrLit);
      return;
    }
    if (p_.single_quote_strings && lang_ != Language::Python && c == '\'') {
      lex_quoted('\'', false, begin, bl, bc, TokenKind::StrLit);
      return;
    }
    if (p_.backtick_raw_string && c == '`') {
      advance();
      while (pos_ < code_.size() && cur() != '`') advance();
      if (pos_ >= code_.size())
        error(bl, "unterminated raw string");
      else
        advance();
      emit(TokenKind::StrLit, begin, bl, bc);
      return;
    }
    if (p_.backtick_template && c == '`') {
      lex_template(begin, bl, bc);
      return;
    }
    if (p_.rust_quote && c == '\'') {
      lex_rust_quote(begin, bl, bc);
      return;
    }
    if (p_.char_literals && c == '\'') {
      lex_quoted('\'', false, begin, bl, bc, TokenKind::CharLit);
      return;
    }

    // regex literal (JavaScript)
    if (p_.regex_literals && c == '/' && regex_position_allowed()) {
      if (lex_regex(begin, bl, bc)) return;
    }

    // numbers
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && p_.leading_dot_float &&
         std::isdigit(static_cast<unsigned char>(at(pos_ + 1))))) {
      lex_number(begin, bl, bc);
      return;
    }

    // identifiers / keywords
    if (ident_start(static_cast<unsigned char>(c), p_)) {
      while (pos_ < code_.size() &&
             ident_cont(static_cast<unsigned char>(cur()), p_))
        advance();
      std::string_view text = code_.substr(begin, pos_ - begin);
      if (text == p_.bool_true || text == p_.bool_false) {
        emit(TokenKind::BoolLit, begin, bl, bc);
      } else if (p_.keywords->count(text)) {
        emit(TokenKind::Keyword, begin, bl, bc);
      } else {
        emit(TokenKind::Identifier, begin, bl, bc);
      }
      return;
    }

    // operators and punctuation, maximal munch
    for (std::string_view op : *p_.operators) {
      if (starts_with(op)) {
        advance(op.size());
        TokenKind kind = TokenKind::Operator;
        if (op.size() == 1 &&
            std::string_view("()[]{},;").find(op[0]) != std::string_view::npos)
          kind = TokenKind::Punct;
        emit(kind, begin, bl, bc);
        return;
      }
    }

    error(bl, std::string("unexpected character '") + c + "'");
    advance();
  }

  bool only_whitespace_before_on_line() const {
    std::size_t i = pos_;
    while (i > 0) {
      char c = code_[i - 1];
      if (c == '\n') return true;
      if (c != ' ' && c != '\t' && c != '\r') return false;
      --i;
    }
    return true;
  }

  void lex_python_string(std::size_t begin, std::size_t bl, std::size_t bc) {
    char q = cur();
    if (starts_with(std::string(3, q))) {
      lex_triple(q, begin, bl, bc);
      return;
    }
    lex_quoted(q, false, begin, bl, bc, TokenKind::StrLit);
  }

  void lex_triple(char q, std::size_t begin, std::size_t bl, std::size_t bc) {
    advance(3);
    std::string close(3, q);
    while (pos_ < code_.size()) {
      if (cur() == '\\') {
        advance(2);
        continue;
      }
      if (starts_with(close)) {
        advance(3);
        emit(TokenKind::StrLit, begin, bl, bc);
        return;
      }
      advance();
    }
    error(bl, "unterminated triple-quoted string");
    emit(TokenKind::StrLit, begin, bl, bc);
  }

  void lex_quoted(char q, bool allow_newlines, std::size_t begin,
                  std::size_t bl, std::size_t bc, TokenKind kind) {
    advance();  // opening quote
    while (pos_ < code_.size()) {
      char c = cur();
      if (c == '\\') {
        advance(2);
        continue;
      }
      if (c == q) {
        advance();
        emit(kind, begin, bl, bc);
        return;
      }
      if (c == '\n' && !allow_newlines) break;
      advance();
    }
    error(bl, "unterminated string literal");
    emit(kind, begin, bl, bc);
  }

  void lex_rust_raw_string(std::size_t begin, std::size_t bl, std::size_t bc) {
    std::size_t hashes = 0;
    while (pos_ < code_.size() && cur() == '#') {
      ++hashes;
      advance();
    }
    if (pos_ >= code_.size() || cur() != '"') {
      error(bl, "malformed raw string");
      emit(TokenKind::StrLit, begin, bl, bc);
      return;
    }
    advance();
    std::string close = "\"" + std::string(hashes, '#');
    while (pos_ < code_.size()) {
      if (starts_with(close)) {
        advance(close.size());
        emit(TokenKind::StrLit, begin, bl, bc);
        return;
      }
      advance();
    }
    error(bl, "unterminated raw string");
    emit(TokenKind::StrLit, begin, bl, bc);
  }

  void lex_template(std::size_t begin, std::size_t bl, std::size_t bc) {
    advance();  // opening backtick
    scan_template_body(bl);
    emit(TokenKind::StrLit, begin, bl, bc);
  }

  // Consumes up to and including the closing backtick.
  void scan_template_body(std::size_t bl) {
    while (pos_ < code_.size()) {
      char c = cur();
      if (c == '\\') {
        advance(2);
        continue;
      }
      if (c == '`') {
        advance();
        return;
      }
      if (c == '$' && at(pos_ + 1) == '{') {
        advance(2);
        std::size_t depth = 1;
        while (pos_ < code_.size() && depth > 0) {
          char d = cur();
          if (d == '{') {
            ++depth;
            advance();
          } else if (d == '}') {
            --depth;
            advance();
          } else if (d == '`') {
            advance();
            scan_template_body(bl);
          } else if (d == '"' || d == '\'') {
            char q = d;
            advance();
            while (pos_ < code_.size() && cur() != q) {
              if (cur() == '\\') advance();
              advance();
            }
            if (pos_ < code_.size()) advance();
          } else {
            advance();
          }
        }
        continue;
      }
      advance();
    }
    error(bl, "unterminated template literal");
  }

  void lex_rust_quote(std::size_t begin, std::size_t bl, std::size_t bc) {
    // char literal when a closing quote follows one (escaped or UTF-8)
    // character, lifetime otherwise
    if (at(pos_ + 1) == '\\') {
      advance(2);  // quote + backslash
      advance();   // escaped char
      // \u{...} escapes
      if (at(pos_ - 1) == 'u' && cur() == '{') {
        while (pos_ < code_.size() && cur() != '}') advance();
        if (pos_ < code_.size()) advance();
      }
      if (pos_ < code_.size() && cur() == '\'') {
        advance();
        emit(TokenKind::CharLit, begin, bl, bc);
      } else {
        error(bl, "unterminated character literal");
        emit(TokenKind::CharLit, begin, bl, bc);
      }
      return;
    }
    std::size_t k = utf8_len(static_cast<unsigned char>(at(pos_ + 1)));
    if (at(pos_ + 1) != '\0' && at(pos_ + 1 + k) == '\'') {
      advance(2 + k);
      emit(TokenKind::CharLit, begin, bl, bc);
      return;
    }
    advance();  // the quote
    while (pos_ < code_.size() &&
           ident_cont(static_cast<unsigned char>(cur()), p_))
      advance();
    emit(TokenKind::Lifetime, begin, bl, bc);
  }

  bool regex_position_allowed() const {
    for (auto it = result_.tokens.rbegin(); it != result_.tokens.rend(); ++it) {
      if (it->kind == TokenKind::Comment) continue;
      if (it->kind == TokenKind::Operator) return true;
      if (it->kind == TokenKind::Punct) {
        char ch = code_[it->begin];
        return ch == '(' || ch == '[' || ch == '{' || ch == ',' || ch == ';';
      }
      if (it->kind == TokenKind::Keyword) {
        std::string_view kw = token_text(code_, *it);
        return kw == "return" || kw == "case" || kw == "typeof" ||
               kw == "instanceof" || kw == "in" || kw == "of" ||
               kw == "new" || kw == "delete" || kw == "void" ||
               kw == "throw" || kw == "do" || kw == "else" || kw == "yield" ||
               kw == "await";
      }
      return false;
    }
    return true;  // start of input
  }

  // Returns false if the scan hit a newline/EOF, in which case the '/' is
  // re-lexed as an operator.
  bool lex_regex(std::size_t begin, std::size_t bl, std::size_t bc) {
    std::size_t save_pos = pos_, save_line = line_, save_col = col_;
    advance();  // '/'
    bool in_class = false;
    while (pos_ < code_.size()) {
      char c = cur();
      if (c == '\\') {
        advance(2);
        continue;
      }
      if (c == '\n') break;
      if (c == '[') in_class = true;
      if (c == ']') in_class = false;
      if (c == '/' && !in_class) {
        advance();
        while (pos_ < code_.size() &&
               std::isalpha(static_cast<unsigned char>(cur())))
          advance();
        emit(TokenKind::RegexLit, begin, bl, bc);
        return true;
      }
      advance();
    }
    pos_ = save_pos;
    line_ = save_line;
    col_ = save_col;
    return false;
  }

  void lex_number(std::size_t begin, std::size_t bl, std::size_t bc) {
    bool is_float = false;
    auto digit_ok = [&](char c, int base) {
      if (c == '_') return true;
      if (p_.apostrophe_digit_sep && c == '\'' &&
          std::isalnum(static_cast<unsigned char>(at(pos_ + 1))))
        return true;
      if (base == 16) return std::isxdigit(static_cast<unsigned char>(c)) != 0;
      if (base == 2) return c == '0' || c == '1';
      if (base == 8) return c >= '0' && c <= '7';
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    };

    int base = 10;
    if (cur() == '0' && (at(pos_ + 1) == 'x' || at(pos_ + 1) == 'X')) {
      base = 16;
      advance(2);
    } else if (cur() == '0' && (at(pos_ + 1) == 'b' || at(pos_ + 1) == 'B')) {
      base = 2;
      advance(2);
    } else if (cur() == '0' && (at(pos_ + 1) == 'o' || at(pos_ + 1) == 'O')) {
      base = 8;
      advance(2);
    }

    while (pos_ < code_.size() && digit_ok(cur(), base)) advance();

    // fractional part
    if (base == 10 && pos_ < code_.size() && cur() == '.') {
      char next = at(pos_ + 1);
      bool take = false;
      if (std::isdigit(static_cast<unsigned char>(next))) {
        take = true;
      } else if (next != '.' && lang_ != Language::Rust &&
                 !ident_start(static_cast<unsigned char>(next), p_) &&
                 pos_ > begin) {
        take = true;  // trailing dot float like "1."
      }
      if (take) {
        is_float = true;
        advance();
        while (pos_ < code_.size() && digit_ok(cur(), 10)) advance();
      }
    }

    // exponent
    if (base == 10 && pos_ < code_.size() && (cur() == 'e' || cur() == 'E')) {
      char next = at(pos_ + 1);
      char next2 = at(pos_ + 2);
      if (std::isdigit(static_cast<unsigned char>(next)) ||
          ((next == '+' || next == '-') &&
           std::isdigit(static_cast<unsigned char>(next2)))) {
        is_float = true;
        advance();
        if (cur() == '+' || cur() == '-') advance();
        while (pos_ < code_.size() && digit_ok(cur(), 10)) advance();
      }
    }

    // type suffix (L, f, u64, n, j, ...)
    while (pos_ < code_.size() &&
           (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_')) {
      if ((cur() == 'f' || cur() == 'F') && lang_ != Language::Rust)
        is_float = true;
      if (lang_ == Language::Rust && (starts_with("f32") || starts_with("f64")))
        is_float = true;
      advance();
    }

    emit(is_float ? TokenKind::FloatLit : TokenKind::IntLit, begin, bl, bc);
  }

  std::string_view code_;
  Language lang_;
  Profile p_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  LexResult result_;
};

}  // namespace

LexResult lex(std::string_view code, Language lang) {
  return Lexer(code, lang).run();
}

}  // namespace mct
