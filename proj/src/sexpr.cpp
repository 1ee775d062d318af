#include "squarint/sexpr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "squarint/errors.hpp"

namespace squarint {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  SExpr read() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') return read_list();
    if (c == ')') fail("unexpected ')'");
    if (c == '"') return read_string();
    return read_atom();
  }

  void expect_end() {
    skip();
    if (pos_ != src_.size()) fail("trailing input");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  SExpr read_list() {
    SExpr e;
    e.kind = SExpr::Kind::List;
    e.pos = pos_++;
    for (;;) {
      skip();
      if (pos_ >= src_.size()) fail("unterminated list");
      if (src_[pos_] == ')') {
        ++pos_;
        return e;
      }
      e.items.push_back(read());
    }
  }

  SExpr read_string() {
    SExpr e;
    e.kind = SExpr::Kind::String;
    e.pos = pos_++;
    for (;;) {
      if (pos_ >= src_.size()) fail("unterminated string");
      const char c = src_[pos_++];
      if (c == '"') return e;
      if (c == '\\') {
        if (pos_ >= src_.size()) fail("unterminated escape");
        const char n = src_[pos_++];
        switch (n) {
          case 'n': e.text += '\n'; break;
          case 't': e.text += '\t'; break;
          case '"': e.text += '"'; break;
          case '\\': e.text += '\\'; break;
          default: fail(std::string("bad escape \\") + n);
        }
      } else {
        e.text += c;
      }
    }
  }

  SExpr read_atom() {
    SExpr e;
    e.pos = pos_;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' || c == ';') break;
      e.text += c;
      ++pos_;
    }
    return e;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + '"';
}

}  // namespace

SExpr parse_sexpr(std::string_view src) {
  Reader r(src);
  SExpr e = r.read();
  r.expect_end();
  return e;
}

std::string write_sexpr(const SExpr& e) {
  switch (e.kind) {
    case SExpr::Kind::Atom: return e.text;
    case SExpr::Kind::String: return quote(e.text);
    case SExpr::Kind::List: {
      std::string out = "(";
      for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) out += ' ';
        out += write_sexpr(e.items[i]);
      }
      return out + ')';
    }
  }
  return {};
}

std::string shortest(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

bool parse_double(std::string_view s, double& out) {
  if (s == "inf" || s == "+inf") {
    out = HUGE_VAL;
    return true;
  }
  if (s == "-inf") {
    out = -HUGE_VAL;
    return true;
  }
  if (s == "nan") {
    out = std::nan("");
    return true;
  }
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace squarint
