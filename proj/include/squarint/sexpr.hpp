#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace squarint {

/// Generic s-expression node used by the registry file format and the
/// expression syntax. Atoms keep their source text; strings are unescaped.
struct SExpr {
  enum class Kind { Atom, String, List };

  Kind kind = Kind::Atom;
  std::string text;
  std::vector<SExpr> items;
  std::size_t pos = 0;  // byte offset in the source, for error messages

  bool is_atom(std::string_view s) const { return kind == Kind::Atom && text == s; }
  bool is_keyword() const { return kind == Kind::Atom && !text.empty() && text.front() == ':'; }
};

/// Parses exactly one s-expression (trailing whitespace allowed).
/// Throws ParseError carrying the byte offset of the problem.
SExpr parse_sexpr(std::string_view src);

std::string write_sexpr(const SExpr& e);

/// Shortest decimal that reads back to the same binary64.
std::string shortest(double v);

/// Strict full-string double parse; accepts inf/nan spellings from shortest().
bool parse_double(std::string_view s, double& out);

}  // namespace squarint
