#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mct/lang.hpp"
#include "mct/lexer.hpp"

namespace mct {

/// One statement-level node recovered by the structural parser. For brace
/// languages a statement runs to an explicit ';', a virtual terminator
/// (Go/JavaScript newline rules), or the end of its enclosing block; for
/// Python it is a logical line (or a ';'-separated piece of one).
struct StmtNode {
  enum class Kind {
    Simple,    // plain statement, candidate for deletion
    Compound,  // header with attached block(s): if/for/def/fn/...
    Bare,      // residue that is not a deletable unit (expression tails etc.)
  };

  Kind kind = Kind::Simple;
  std::size_t begin = 0;  // byte span over the statement's tokens
  std::size_t end = 0;    // includes the terminator when explicit
  std::size_t line = 1;   // 1-based line of the first token
  bool terminated = false;
  bool control = false;  // starts with a control keyword (if/else/for/...)
  bool jump = false;     // return/break/continue/throw/raise/goto/fallthrough
  int block = -1;        // owning block index
  std::vector<int> children;  // attached block indices
};

struct BlockNode {
  int parent_stmt = -1;  // -1 for the top-level block
  bool function_body = false;
  bool expr_context = false;  // brace group in expression position
  std::vector<int> stmts;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct SyntaxTree {
  bool ok = false;
  std::string error;  // first structural problem, empty when ok
  std::vector<StmtNode> stmts;
  std::vector<BlockNode> blocks;  // blocks[0] is the top level
  // Byte ranges that follow an unconditional jump inside the same block.
  std::vector<std::pair<std::size_t, std::size_t>> dead_regions;

  bool in_dead_region(std::size_t offset) const {
    for (const auto& [lo, hi] : dead_regions)
      if (offset >= lo && offset < hi) return true;
    return false;
  }
};

/// Lexes and structurally parses `code`: bracket balance for every language,
/// plus indentation layout and suite rules for Python. The returned tree is
/// best-effort when !ok.
SyntaxTree analyze_structure(std::string_view code, Language lang);

inline bool parses(std::string_view code, Language lang) {
  return analyze_structure(code, lang).ok;
}

}  // namespace mct
