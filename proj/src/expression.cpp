#include "squarint/expression.hpp"

#include <cmath>
#include <functional>

#include "squarint/errors.hpp"
#include "squarint/sexpr.hpp"
#include "squarint/special.hpp"

namespace squarint {

Expr Expr::num(double v) {
  Expr e;
  e.kind = Kind::Number;
  e.number = v;
  return e;
}

Expr Expr::sym(std::string s) {
  Expr e;
  e.kind = Kind::Symbol;
  e.name = std::move(s);
  return e;
}

Expr Expr::apply(std::string fn, std::vector<Expr> a) {
  Expr e;
  e.kind = Kind::Apply;
  e.name = std::move(fn);
  e.args = std::move(a);
  return e;
}

namespace {

Expr from_sexpr(const SExpr& s) {
  switch (s.kind) {
    case SExpr::Kind::String:
      throw ParseError("string literal not allowed in expression at position " + std::to_string(s.pos));
    case SExpr::Kind::Atom: {
      double v = 0.0;
      if (parse_double(s.text, v)) return Expr::num(v);
      return Expr::sym(s.text);
    }
    case SExpr::Kind::List: {
      if (s.items.empty() || s.items.front().kind != SExpr::Kind::Atom) {
        throw ParseError("expected function name at position " + std::to_string(s.pos));
      }
      std::vector<Expr> args;
      for (std::size_t i = 1; i < s.items.size(); ++i) args.push_back(from_sexpr(s.items[i]));
      return Expr::apply(s.items.front().text, std::move(args));
    }
  }
  return {};
}

double real_arg(Complex z, const std::string& fn) {
  if (z.imag() != 0.0) throw DomainError(fn + " expects a real argument");
  return z.real();
}

int int_arg(Complex z, const std::string& fn) {
  const double v = real_arg(z, fn);
  if (v != std::floor(v) || std::abs(v) > 1e6) throw DomainError(fn + " expects an integer argument");
  return static_cast<int>(v);
}

using Args = std::vector<Complex>;

struct FnSpec {
  int arity;  // −1: variadic (at least one)
  std::function<Complex(const Args&, const std::string&)> fn;
};

Complex acoth(Complex z) { return std::atanh(1.0 / z); }

const std::map<std::string, FnSpec, std::less<>>& table() {
  static const std::map<std::string, FnSpec, std::less<>> t = {
      {"+", {-1, [](const Args& a, const std::string&) { Complex s = 0.0; for (auto v : a) s += v; return s; }}},
      {"*", {-1, [](const Args& a, const std::string&) { Complex s = 1.0; for (auto v : a) s *= v; return s; }}},
      {"-", {-1, [](const Args& a, const std::string&) {
         if (a.size() == 1) return -a[0];
         Complex s = a[0];
         for (std::size_t i = 1; i < a.size(); ++i) s -= a[i];
         return s;
       }}},
      {"/", {2, [](const Args& a, const std::string&) {
         if (a[1] == Complex(0.0, 0.0)) throw DomainError("division by zero");
         return a[0] / a[1];
       }}},
      {"neg", {1, [](const Args& a, const std::string&) { return -a[0]; }}},
      {"pow", {2, [](const Args& a, const std::string&) {
         if (a[0].imag() == 0.0 && a[1].imag() == 0.0 && (a[0].real() >= 0.0 || a[1].real() == std::floor(a[1].real()))) {
           return Complex(std::pow(a[0].real(), a[1].real()), 0.0);
         }
         return std::pow(a[0], a[1]);
       }}},
      {"sqrt", {1, [](const Args& a, const std::string&) {
         if (a[0].imag() == 0.0 && a[0].real() >= 0.0) return Complex(std::sqrt(a[0].real()), 0.0);
         return std::sqrt(a[0]);
       }}},
      {"log", {1, [](const Args& a, const std::string&) {
         if (a[0] == Complex(0.0, 0.0)) throw DomainError("log of zero");
         if (a[0].imag() == 0.0 && a[0].real() > 0.0) return Complex(std::log(a[0].real()), 0.0);
         return std::log(a[0]);
       }}},
      {"exp", {1, [](const Args& a, const std::string&) { return std::exp(a[0]); }}},
      {"sin", {1, [](const Args& a, const std::string&) { return std::sin(a[0]); }}},
      {"cos", {1, [](const Args& a, const std::string&) { return std::cos(a[0]); }}},
      {"tan", {1, [](const Args& a, const std::string&) { return std::tan(a[0]); }}},
      {"sinh", {1, [](const Args& a, const std::string&) { return std::sinh(a[0]); }}},
      {"cosh", {1, [](const Args& a, const std::string&) { return std::cosh(a[0]); }}},
      {"tanh", {1, [](const Args& a, const std::string&) { return std::tanh(a[0]); }}},
      {"coth", {1, [](const Args& a, const std::string&) { return 1.0 / std::tanh(a[0]); }}},
      {"atan", {1, [](const Args& a, const std::string&) {
         if (a[0].imag() == 0.0) return Complex(std::atan(a[0].real()), 0.0);
         return std::atan(a[0]);
       }}},
      {"atanh", {1, [](const Args& a, const std::string&) {
         if (a[0].imag() == 0.0 && std::abs(a[0].real()) < 1.0) return Complex(std::atanh(a[0].real()), 0.0);
         return std::atanh(a[0]);
       }}},
      {"acoth", {1, [](const Args& a, const std::string&) {
         if (a[0].imag() == 0.0 && std::abs(a[0].real()) > 1.0) return Complex(std::atanh(1.0 / a[0].real()), 0.0);
         return acoth(a[0]);
       }}},
      {"lgamma", {1, [](const Args& a, const std::string&) { return log_gamma(a[0]); }}},
      {"gamma", {1, [](const Args& a, const std::string&) { return std::exp(log_gamma(a[0])); }}},
      {"digamma", {1, [](const Args& a, const std::string&) { return digamma(a[0]); }}},
      {"zeta", {1, [](const Args& a, const std::string& f) { return Complex(zeta(real_arg(a[0], f)), 0.0); }}},
      {"lerch", {3, [](const Args& a, const std::string& f) {
         return lerch_phi(a[0], real_arg(a[1], f), real_arg(a[2], f));
       }}},
      {"expint", {2, [](const Args& a, const std::string& f) {
         return Complex(exp_integral_E(int_arg(a[0], f), real_arg(a[1], f)), 0.0);
       }}},
      // e^x E_n(x), finite for large x
      {"expint-scaled", {2, [](const Args& a, const std::string& f) {
         const int n = int_arg(a[0], f);
         const double x = real_arg(a[1], f);
         if (n == 1) return Complex(expint_e1_scaled(Complex(x, 0.0)).real(), 0.0);
         if (x > 700.0) throw DomainError("expint-scaled supports only n = 1 beyond x = 700");
         return Complex(std::exp(x) * exp_integral_E(n, x), 0.0);
       }}},
      {"re", {1, [](const Args& a, const std::string&) { return Complex(a[0].real(), 0.0); }}},
      {"im", {1, [](const Args& a, const std::string&) { return Complex(a[0].imag(), 0.0); }}},
      {"abs", {1, [](const Args& a, const std::string&) { return Complex(std::abs(a[0]), 0.0); }}},
  };
  return t;
}

const ExprEnv& builtin_symbols() {
  static const ExprEnv env = {
      {"pi", constants::pi},
      {"e", constants::e},
      {"euler_gamma", constants::euler_gamma},
      {"catalan", constants::catalan},
      {"log2", constants::log2},
      {"i", Complex(0.0, 1.0)},
  };
  return env;
}

}  // namespace

Expr Expr::parse(std::string_view text) { return from_sexpr(parse_sexpr(text)); }

const std::vector<std::string>& known_functions() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, spec] : table()) v.push_back(name);
    return v;
  }();
  return names;
}

Complex evaluate(const Expr& e, const ExprEnv& env) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return {e.number, 0.0};
    case Expr::Kind::Symbol: {
      if (auto it = env.find(e.name); it != env.end()) return it->second;
      const auto& b = builtin_symbols();
      if (auto it = b.find(e.name); it != b.end()) return it->second;
      throw DomainError("unbound symbol '" + e.name + "'");
    }
    case Expr::Kind::Apply: {
      auto it = table().find(e.name);
      if (it == table().end()) throw DomainError("unknown function '" + e.name + "'");
      const auto& spec = it->second;
      if ((spec.arity >= 0 && static_cast<int>(e.args.size()) != spec.arity) || (spec.arity < 0 && e.args.empty())) {
        throw DomainError("wrong number of arguments to '" + e.name + "'");
      }
      Args args;
      args.reserve(e.args.size());
      for (const auto& a : e.args) args.push_back(evaluate(a, env));
      return spec.fn(args, e.name);
    }
  }
  return {};
}

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return shortest(e.number);
    case Expr::Kind::Symbol: return e.name;
    case Expr::Kind::Apply: {
      std::string out = "(" + e.name;
      for (const auto& a : e.args) out += " " + render(a);
      return out + ")";
    }
  }
  return {};
}

}  // namespace squarint
