#include "squarint/serialize.hpp"

#include <cctype>
#include <cmath>
#include <map>

#include "squarint/errors.hpp"

namespace squarint {

namespace {

// ---------------------------------------------------------------------------
// Writing

std::string num(double v) { return shortest(v); }

std::string quote(const std::string& s) {
  SExpr e;
  e.kind = SExpr::Kind::String;
  e.text = s;
  return write_sexpr(e);
}

std::string num_list(const std::vector<double>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + num(v[i]);
  return out + ")";
}

std::string int_list(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out + ")";
}

std::string write_spec(const CubeIntegrandSpec& s) {
  std::string out = "(spec :k " + std::to_string(s.dim) + " :mu (";
  for (std::size_t i = 0; i < s.exponents.size(); ++i) {
    out += (i ? " (" : "(") + num(s.exponents[i].real()) + " " + num(s.exponents[i].imag()) + ")";
  }
  out += ") :w " + num_list(s.log_weights) + " :j " + std::to_string(s.log_power) + " :m " + num(s.log_shift);
  if (s.geometric) {
    out += " :geo (geo " + num(s.geometric->z.real()) + " " + num(s.geometric->z.imag()) + " " +
           num_list(s.geometric->exps) + ")";
  }
  if (!s.poly_log.empty()) {
    out += " :poly (";
    for (std::size_t i = 0; i < s.poly_log.size(); ++i) {
      out += (i ? " " : "") + std::string("(mono ") + num(s.poly_log[i].coeff) + " " + int_list(s.poly_log[i].powers) + ")";
    }
    out += ")";
  }
  return out + ")";
}

std::string write_leaf(const PlanLeaf& leaf) {
  return std::visit(
      [](const auto& l) -> std::string {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, HalflinePlan>) {
          std::string out = "(halfline :m " + num(l.exp_weight) + " :num " + num_list(l.product.numerator) + " :factors (";
          for (std::size_t i = 0; i < l.product.factors.size(); ++i) {
            const auto& f = l.product.factors[i];
            out += (i ? " " : "") + std::string("(factor ") + num(f.slope) + " " + num(f.offset.real()) + " " +
                   num(f.offset.imag()) + " " + std::to_string(f.multiplicity) + ")";
          }
          return out + "))";
        } else if constexpr (std::is_same_v<T, CubePlan>) {
          std::string out = "(cube :method " + to_string(l.method);
          for (const auto& t : l.terms) out += " (cterm " + num(t.coeff) + " " + write_spec(t.spec) + ")";
          return out + ")";
        } else if constexpr (std::is_same_v<T, SeriesPlan>) {
          const auto& s = l.spec;
          std::string out = "(series :family " + to_string(s.family) + " :accel " + to_string(s.acceleration) + " :params (";
          bool first = true;
          for (const auto& [k, v] : s.params) {
            out += (first ? "(" : " (") + k + " " + num(v) + ")";
            first = false;
          }
          out += ")";
          if (!s.halfline_terms.empty()) {
            out += " :terms (";
            for (std::size_t i = 0; i < s.halfline_terms.size(); ++i) {
              const auto& t = s.halfline_terms[i];
              out += (i ? " " : "") + std::string("(pterm :coeff ") + num(t.coeff) + " :m0 " + num(t.exp_weight) +
                     " :m1 " + num(t.exp_weight_step) + " :num " + num_list(t.numerator) + " :factors (";
              for (std::size_t j = 0; j < t.factors.size(); ++j) {
                const auto& f = t.factors[j];
                out += (j ? " " : "") + std::string("(pfactor ") + num(f.slope) + " " + num(f.offset.real()) + " " +
                       num(f.offset.imag()) + " " + num(f.offset_step.real()) + " " + num(f.offset_step.imag()) + " " +
                       std::to_string(f.multiplicity) + ")";
              }
              out += "))";
            }
            out += ")";
          }
          if (s.term) out += " :term " + render(*s.term);
          return out + ")";
        } else {
          return "(const " + render(l.expr) + ")";
        }
      },
      leaf);
}

// ---------------------------------------------------------------------------
// Reading

[[noreturn]] void fail_at(const SExpr& e, const std::string& msg) {
  throw ParseError(msg + " at position " + std::to_string(e.pos));
}

double num_of(const SExpr& e) {
  double v = 0.0;
  if (e.kind != SExpr::Kind::Atom || !parse_double(e.text, v)) fail_at(e, "expected number, got '" + write_sexpr(e) + "'");
  return v;
}

int int_of(const SExpr& e) {
  const double v = num_of(e);
  if (v != std::floor(v) || std::abs(v) > 1e9) fail_at(e, "expected integer");
  return static_cast<int>(v);
}

const std::string& atom_of(const SExpr& e) {
  if (e.kind != SExpr::Kind::Atom) fail_at(e, "expected symbol");
  return e.text;
}

const std::string& string_of(const SExpr& e) {
  if (e.kind != SExpr::Kind::String) fail_at(e, "expected string literal");
  return e.text;
}

const SExpr& list_of(const SExpr& e, std::size_t n = 0, const char* head = nullptr) {
  if (e.kind != SExpr::Kind::List) fail_at(e, head ? std::string("expected (") + head + " ...)" : "expected list");
  if (head && (e.items.empty() || !e.items[0].is_atom(head))) fail_at(e, std::string("expected (") + head + " ...)");
  if (n && e.items.size() != n) fail_at(e, "expected " + std::to_string(n) + " items");
  return e;
}

// (head :key value ... positional ...)
struct Form {
  std::map<std::string, const SExpr*> kw;
  std::vector<const SExpr*> pos;
  const SExpr* self;

  Form(const SExpr& e, const char* head, std::initializer_list<const char*> allowed) : self(&e) {
    list_of(e, 0, head);
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const SExpr& it = e.items[i];
      if (it.is_keyword()) {
        const std::string key = it.text.substr(1);
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) fail_at(it, "unknown keyword :" + key + " in (" + head + " ...)");
        if (i + 1 >= e.items.size()) fail_at(it, "keyword :" + key + " without value");
        if (kw.count(key)) fail_at(it, "duplicate keyword :" + key);
        kw[key] = &e.items[++i];
      } else {
        pos.push_back(&it);
      }
    }
  }
  const SExpr& need(const std::string& k) const {
    auto it = kw.find(k);
    if (it == kw.end()) fail_at(*self, "missing :" + k);
    return *it->second;
  }
  const SExpr* get(const std::string& k) const {
    auto it = kw.find(k);
    return it == kw.end() ? nullptr : it->second;
  }
  void no_positional() const {
    if (!pos.empty()) fail_at(*pos.front(), "unexpected positional item");
  }
};

std::vector<double> nums_of(const SExpr& e) {
  list_of(e);
  std::vector<double> v;
  for (const auto& it : e.items) v.push_back(num_of(it));
  return v;
}

std::vector<int> ints_of(const SExpr& e) {
  list_of(e);
  std::vector<int> v;
  for (const auto& it : e.items) v.push_back(int_of(it));
  return v;
}

Expr expr_of(const SExpr& e) {
  try {
    return Expr::parse(write_sexpr(e));
  } catch (const ParseError& err) {
    fail_at(e, std::string("bad expression: ") + err.what());
  }
}

CubeIntegrandSpec parse_spec(const SExpr& e) {
  Form f(e, "spec", {"k", "mu", "w", "j", "m", "geo", "poly"});
  f.no_positional();
  CubeIntegrandSpec s;
  s.dim = int_of(f.need("k"));
  for (const auto& pair : list_of(f.need("mu")).items) {
    list_of(pair, 2);
    s.exponents.emplace_back(num_of(pair.items[0]), num_of(pair.items[1]));
  }
  s.log_weights = nums_of(f.need("w"));
  s.log_power = int_of(f.need("j"));
  s.log_shift = num_of(f.need("m"));
  if (const SExpr* g = f.get("geo")) {
    list_of(*g, 4, "geo");
    s.geometric = GeometricFactor{{num_of(g->items[1]), num_of(g->items[2])}, nums_of(g->items[3])};
  }
  if (const SExpr* p = f.get("poly")) {
    for (const auto& m : list_of(*p).items) {
      list_of(m, 3, "mono");
      s.poly_log.push_back({num_of(m.items[1]), ints_of(m.items[2])});
    }
  }
  return s;
}

FactorProduct parse_factors(const SExpr& num_e, const SExpr& factors_e) {
  FactorProduct fp;
  fp.numerator = nums_of(num_e);
  for (const auto& fe : list_of(factors_e).items) {
    list_of(fe, 5, "factor");
    fp.factors.push_back({num_of(fe.items[1]), {num_of(fe.items[2]), num_of(fe.items[3])}, int_of(fe.items[4])});
  }
  return fp;
}

PlanLeaf parse_leaf(const SExpr& e) {
  if (e.kind != SExpr::Kind::List || e.items.empty()) fail_at(e, "expected plan leaf");
  const std::string& head = atom_of(e.items[0]);
  if (head == "halfline") {
    Form f(e, "halfline", {"m", "num", "factors"});
    f.no_positional();
    HalflinePlan h;
    h.exp_weight = f.get("m") ? num_of(*f.get("m")) : 0.0;
    h.product = parse_factors(f.need("num"), f.need("factors"));
    return h;
  }
  if (head == "cube") {
    Form f(e, "cube", {"method"});
    CubePlan c;
    if (const SExpr* m = f.get("method")) {
      auto cm = cube_method_from_string(atom_of(*m));
      if (!cm) fail_at(*m, "unknown cube method '" + m->text + "'");
      c.method = *cm;
    }
    for (const SExpr* t : f.pos) {
      list_of(*t, 3, "cterm");
      c.terms.push_back({num_of(t->items[1]), parse_spec(t->items[2])});
    }
    return c;
  }
  if (head == "series") {
    Form f(e, "series", {"family", "accel", "params", "terms", "term"});
    f.no_positional();
    SeriesSpec s;
    const SExpr& fam = f.need("family");
    auto sf = series_family_from_string(atom_of(fam));
    if (!sf) fail_at(fam, "unknown series family '" + fam.text + "'");
    s.family = *sf;
    if (const SExpr* a = f.get("accel")) {
      auto acc = acceleration_from_string(atom_of(*a));
      if (!acc) fail_at(*a, "unknown acceleration '" + a->text + "'");
      s.acceleration = *acc;
    }
    if (const SExpr* p = f.get("params")) {
      for (const auto& kv : list_of(*p).items) {
        list_of(kv, 2);
        s.params[atom_of(kv.items[0])] = num_of(kv.items[1]);
      }
    }
    if (const SExpr* ts = f.get("terms")) {
      for (const auto& te : list_of(*ts).items) {
        Form tf(te, "pterm", {"coeff", "m0", "m1", "num", "factors"});
        tf.no_positional();
        ParametricHalflineTerm t;
        t.coeff = tf.get("coeff") ? num_of(*tf.get("coeff")) : 1.0;
        t.exp_weight = tf.get("m0") ? num_of(*tf.get("m0")) : 0.0;
        t.exp_weight_step = tf.get("m1") ? num_of(*tf.get("m1")) : 0.0;
        t.numerator = nums_of(tf.need("num"));
        for (const auto& fe : list_of(tf.need("factors")).items) {
          list_of(fe, 7, "pfactor");
          t.factors.push_back({num_of(fe.items[1]),
                               {num_of(fe.items[2]), num_of(fe.items[3])},
                               {num_of(fe.items[4]), num_of(fe.items[5])},
                               int_of(fe.items[6])});
        }
        s.halfline_terms.push_back(std::move(t));
      }
    }
    if (const SExpr* t = f.get("term")) s.term = expr_of(*t);
    return SeriesPlan{s};
  }
  if (head == "const") {
    if (e.items.size() != 2) fail_at(e, "expected (const EXPR)");
    return ConstantPlan{expr_of(e.items[1])};
  }
  fail_at(e, "unknown plan leaf '" + head + "'");
}

}  // namespace

std::string write_plan(const Plan& plan) {
  std::string out = "(plan";
  for (const auto& t : plan.terms) {
    out += " (term " + num(t.coeff) + " " + to_string(t.part) + " " + write_leaf(t.leaf) + ")";
  }
  return out + ")";
}

Plan parse_plan(const SExpr& e) {
  list_of(e, 0, "plan");
  Plan p;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& t = list_of(e.items[i], 4, "term");
    auto part = part_from_string(atom_of(t.items[2]));
    if (!part) fail_at(t.items[2], "unknown part '" + t.items[2].text + "'");
    p.terms.push_back({num_of(t.items[1]), *part, parse_leaf(t.items[3])});
  }
  return p;
}

std::string write_record(const IdentityRecord& r) {
  return "(identity :id " + quote(r.id) + " :loc " + quote(r.paper_location) + " :tol " + num(r.tolerance) +
         " :trust " + to_string(r.trust) + " :desc " + quote(r.description) + " :lhs " + write_plan(r.lhs) +
         " :rhs " + write_plan(r.rhs) + ")";
}

IdentityRecord parse_record(std::string_view line) {
  const SExpr e = parse_sexpr(line);
  Form f(e, "identity", {"id", "loc", "tol", "trust", "desc", "lhs", "rhs"});
  f.no_positional();
  IdentityRecord r;
  r.id = string_of(f.need("id"));
  if (const SExpr* l = f.get("loc")) r.paper_location = string_of(*l);
  if (const SExpr* d = f.get("desc")) r.description = string_of(*d);
  r.tolerance = num_of(f.need("tol"));
  const SExpr& tr = f.need("trust");
  auto trust = trust_from_string(atom_of(tr));
  if (!trust) fail_at(tr, "unknown trust '" + tr.text + "'");
  r.trust = *trust;
  r.lhs = parse_plan(f.need("lhs"));
  r.rhs = parse_plan(f.need("rhs"));
  return r;
}

std::string write_registry_file(const std::vector<IdentityRecord>& records) {
  std::string out;
  for (const auto& r : records) out += write_record(r) + "\n";
  return out;
}

std::vector<IdentityRecord> parse_registry_file(std::string_view text) {
  std::vector<IdentityRecord> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    std::size_t a = 0;
    while (a < line.size() && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
    if (a == line.size() || line[a] == ';') continue;
    try {
      out.push_back(parse_record(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Literals

namespace {

[[noreturn]] void lit_fail(const std::string& msg, std::size_t pos) {
  throw ParseError(msg + " at position " + std::to_string(pos));
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Piece {
  std::string_view text;
  std::size_t pos;
};

std::vector<Piece> split(std::string_view s, char sep, std::size_t base) {
  std::vector<Piece> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      std::size_t off = base + start;
      std::string_view piece = trim(s.substr(start, i - start), off);
      out.push_back({piece, off});
      start = i + 1;
    }
  }
  return out;
}

double lit_double(const Piece& p) {
  double v = 0.0;
  if (!parse_double(p.text, v) || !std::isfinite(v)) lit_fail("expected number, got '" + std::string(p.text) + "'", p.pos);
  return v;
}

int lit_int(const Piece& p) {
  const double v = lit_double(p);
  if (v != std::floor(v) || std::abs(v) > 1e9) lit_fail("expected integer, got '" + std::string(p.text) + "'", p.pos);
  return static_cast<int>(v);
}

Complex lit_complex(const Piece& p) {
  try {
    return parse_complex_literal(p.text);
  } catch (const ParseError&) {
    lit_fail("expected complex number, got '" + std::string(p.text) + "'", p.pos);
  }
}

Part lit_part(const Piece& p) {
  auto part = part_from_string(p.text);
  if (!part) lit_fail("part must be value, re or im", p.pos);
  return *part;
}

struct KeyValue {
  std::string key;
  Piece value;
  std::size_t pos;
};

KeyValue key_value(const Piece& p) {
  const std::size_t eq = p.text.find('=');
  if (eq == std::string_view::npos) lit_fail("expected key=value", p.pos);
  std::size_t koff = p.pos;
  std::string_view key = trim(p.text.substr(0, eq), koff);
  std::size_t voff = p.pos + eq + 1;
  std::string_view val = trim(p.text.substr(eq + 1), voff);
  return {std::string(key), {val, voff}, p.pos};
}

}  // namespace

Complex parse_complex_literal(std::string_view s) {
  std::size_t off = 0;
  s = trim(s, off);
  if (s.empty()) throw ParseError("empty complex literal at position 0");
  auto read = [&](std::string_view part, bool imag) -> double {
    if (imag && (part.empty() || part == "+")) return 1.0;
    if (imag && part == "-") return -1.0;
    double v = 0.0;
    if (!parse_double(part, v) || !std::isfinite(v)) {
      throw ParseError("bad complex literal '" + std::string(s) + "' at position 0");
    }
    return v;
  };
  if (s.back() != 'i') return {read(s, false), 0.0};
  const std::string_view body = s.substr(0, s.size() - 1);
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      return {read(body.substr(0, i), false), read(body.substr(i), true)};
    }
  }
  return {0.0, read(body, true)};
}

HalflineLiteral parse_halfline_literal(std::string_view s) {
  HalflineLiteral out;
  bool have_factors = false;
  for (const Piece& seg : split(s, ';', 0)) {
    if (seg.text.empty()) continue;
    if (seg.text.front() == '(') {
      if (have_factors) lit_fail("factor list given twice", seg.pos);
      have_factors = true;
      std::size_t i = 0;
      const std::string_view t = seg.text;
      while (i < t.size()) {
        if (std::isspace(static_cast<unsigned char>(t[i]))) {
          ++i;
          continue;
        }
        if (t[i] != '(') lit_fail("expected '('", seg.pos + i);
        const std::size_t close = t.find(')', i);
        if (close == std::string_view::npos) lit_fail("unterminated factor", seg.pos + i);
        const auto parts = split(t.substr(i + 1, close - i - 1), ',', seg.pos + i + 1);
        if (parts.size() != 3) lit_fail("factor needs (a,b,c)", seg.pos + i);
        LinearFactor f{lit_double(parts[0]), {lit_double(parts[1]), lit_double(parts[2])}, 1};
        i = close + 1;
        if (i < t.size() && t[i] == '^') {
          std::size_t j = i + 1;
          while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
          if (j == i + 1) lit_fail("expected multiplicity after '^'", seg.pos + i + 1);
          f.multiplicity = lit_int({t.substr(i + 1, j - i - 1), seg.pos + i + 1});
          i = j;
        }
        out.plan.product.factors.push_back(f);
      }
      continue;
    }
    const KeyValue kv = key_value(seg);
    if (kv.key == "num") {
      out.plan.product.numerator.clear();
      for (const Piece& p : split(kv.value.text, ',', kv.value.pos)) out.plan.product.numerator.push_back(lit_double(p));
    } else if (kv.key == "m") {
      out.plan.exp_weight = lit_double(kv.value);
    } else if (kv.key == "part") {
      out.part = lit_part(kv.value);
    } else {
      lit_fail("unknown key '" + kv.key + "'", kv.pos);
    }
  }
  if (!have_factors) lit_fail("missing factor list", 0);
  return out;
}

CubeLiteral parse_cube_literal(std::string_view s) {
  CubeLiteral out;
  std::optional<int> k;
  std::vector<Complex> mu;
  std::vector<double> w;
  int j = 0;
  double m = 0.0;
  std::optional<GeometricFactor> geo;
  std::vector<LogMonomial> poly;
  std::vector<std::pair<double, std::vector<Complex>>> terms;
  for (const Piece& seg : split(s, ';', 0)) {
    if (seg.text.empty()) continue;
    const KeyValue kv = key_value(seg);
    const Piece& v = kv.value;
    if (kv.key == "k") {
      k = lit_int(v);
      if (*k < 1) lit_fail("k must be >= 1", v.pos);
    } else if (kv.key == "mu") {
      for (const Piece& p : split(v.text, ',', v.pos)) mu.push_back(lit_complex(p));
    } else if (kv.key == "logw") {
      for (const Piece& p : split(v.text, ',', v.pos)) w.push_back(lit_double(p));
    } else if (kv.key == "j") {
      j = lit_int(v);
    } else if (kv.key == "m") {
      m = lit_double(v);
    } else if (kv.key == "geo") {
      const std::size_t at = v.text.find('@');
      if (at == std::string_view::npos) lit_fail("geo needs z@e1,e2,...", v.pos);
      GeometricFactor g;
      g.z = lit_complex({v.text.substr(0, at), v.pos});
      for (const Piece& p : split(v.text.substr(at + 1), ',', v.pos + at + 1)) g.exps.push_back(lit_double(p));
      geo = g;
    } else if (kv.key == "poly") {
      for (const Piece& mono : split(v.text, '|', v.pos)) {
        const std::size_t colon = mono.text.find(':');
        if (colon == std::string_view::npos) lit_fail("poly monomial needs coeff:p1,p2,...", mono.pos);
        LogMonomial lm;
        lm.coeff = lit_double({mono.text.substr(0, colon), mono.pos});
        for (const Piece& p : split(mono.text.substr(colon + 1), ',', mono.pos + colon + 1)) lm.powers.push_back(lit_int(p));
        poly.push_back(lm);
      }
    } else if (kv.key == "terms") {
      for (const Piece& t : split(v.text, '|', v.pos)) {
        const std::size_t at = t.text.find('@');
        if (at == std::string_view::npos) lit_fail("term needs coeff@mu1,mu2,...", t.pos);
        std::vector<Complex> tm;
        for (const Piece& p : split(t.text.substr(at + 1), ',', t.pos + at + 1)) tm.push_back(lit_complex(p));
        terms.emplace_back(lit_double({t.text.substr(0, at), t.pos}), tm);
      }
    } else if (kv.key == "part") {
      out.part = lit_part(v);
    } else if (kv.key == "method") {
      auto cm = cube_method_from_string(v.text);
      if (!cm) lit_fail("unknown method '" + std::string(v.text) + "'", v.pos);
      out.plan.method = *cm;
    } else {
      lit_fail("unknown key '" + kv.key + "'", kv.pos);
    }
  }
  if (!k) lit_fail("missing k=", 0);
  const auto K = static_cast<std::size_t>(*k);
  if (mu.empty()) mu.assign(K, Complex(0.0, 0.0));
  if (w.empty()) w.assign(K, 1.0);
  if (terms.empty()) terms.emplace_back(1.0, mu);
  for (auto& [c, tm] : terms) {
    CubeIntegrandSpec spec;
    spec.dim = *k;
    spec.exponents = tm;
    spec.log_weights = w;
    spec.log_power = j;
    spec.log_shift = m;
    spec.geometric = geo;
    spec.poly_log = poly;
    out.plan.terms.push_back({c, spec});
  }
  return out;
}

}  // namespace squarint
