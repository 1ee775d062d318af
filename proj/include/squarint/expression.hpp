#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace squarint {

using Complex = std::complex<double>;

/// Closed expression over numbers, named constants and a fixed set of
/// special functions. Used for the constant side of identities and for
/// custom series terms (free variable `n`).
///
/// Symbols: pi, e, euler_gamma, catalan, log2, i, plus whatever the caller
/// binds (series index `n`). Functions are listed in `known_functions()`.
struct Expr {
  enum class Kind { Number, Symbol, Apply };

  Kind kind = Kind::Number;
  double number = 0.0;
  std::string name;
  std::vector<Expr> args;

  static Expr num(double v);
  static Expr sym(std::string s);
  static Expr apply(std::string fn, std::vector<Expr> a);

  /// Parses the s-expression form, e.g. "(/ (log (/ 2187 512)) 50)".
  static Expr parse(std::string_view text);

  bool operator==(const Expr&) const = default;
};

using ExprEnv = std::map<std::string, Complex, std::less<>>;

const std::vector<std::string>& known_functions();

Complex evaluate(const Expr& e, const ExprEnv& env = {});

/// Renders back to the s-expression syntax; parse(render(e)) == e.
std::string render(const Expr& e);

}  // namespace squarint
