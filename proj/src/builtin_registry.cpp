#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "squarint/halfline.hpp"
#include "squarint/registry.hpp"

namespace squarint {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

PlanTerm cst(const std::string& expr, double coeff = 1.0) { return {coeff, Part::Value, ConstantPlan{Expr::parse(expr)}}; }

LinearFactor lf(double a, double b, double c, int mult = 1) { return {a, {b, c}, mult}; }

PlanTerm hl(std::vector<LinearFactor> factors, Part part = Part::Value, double coeff = 1.0,
            std::vector<double> numerator = {1.0}, double m = 0.0) {
  HalflinePlan h;
  h.product.factors = std::move(factors);
  h.product.numerator = std::move(numerator);
  h.exp_weight = m;
  return {coeff, part, h};
}

CubeIntegrandSpec spec(int k, std::vector<Complex> mu, std::vector<double> w, int j, double m = 0.0) {
  CubeIntegrandSpec s;
  s.dim = k;
  s.exponents = std::move(mu);
  s.log_weights = std::move(w);
  s.log_power = j;
  s.log_shift = m;
  return s;
}

CubeIntegrandSpec with_geo(CubeIntegrandSpec s, Complex z, std::vector<double> exps) {
  s.geometric = GeometricFactor{z, std::move(exps)};
  return s;
}

CubeIntegrandSpec with_poly(CubeIntegrandSpec s, std::vector<LogMonomial> poly) {
  s.poly_log = std::move(poly);
  return s;
}

/// Same spec with different exponents per term.
std::vector<CubeTerm> terms_of(const CubeIntegrandSpec& base, std::vector<std::pair<double, std::vector<Complex>>> t) {
  std::vector<CubeTerm> out;
  for (auto& [c, mu] : t) {
    CubeIntegrandSpec s = base;
    s.exponents = std::move(mu);
    out.push_back({c, s});
  }
  return out;
}

PlanTerm cube(std::vector<CubeTerm> terms, Part part = Part::Value, double coeff = 1.0,
              CubeMethod method = CubeMethod::Auto) {
  return {coeff, part, CubePlan{std::move(terms), method}};
}

PlanTerm cube1(CubeIntegrandSpec s, Part part = Part::Value, double coeff = 1.0) {
  return cube({{1.0, std::move(s)}}, part, coeff);
}

PlanTerm ser(SeriesSpec s, Part part = Part::Value, double coeff = 1.0) { return {coeff, part, SeriesPlan{std::move(s)}}; }

SeriesSpec family(SeriesFamily f, std::map<std::string, double, std::less<>> params) {
  SeriesSpec s;
  s.family = f;
  s.params = std::move(params);
  return s;
}

SeriesSpec custom(const std::string& term, double start, double z = 1.0) {
  SeriesSpec s = family(SeriesFamily::CustomTerm, {{"start", start}});
  if (z != 1.0) s.params["z_re"] = z;
  if (z == -1.0) s.acceleration = Acceleration::AlternatingTransform;
  s.term = Expr::parse(term);
  return s;
}

std::vector<Complex> fill(int k, Complex v) { return std::vector<Complex>(static_cast<std::size_t>(k), v); }
std::vector<double> ones(int k) { return std::vector<double>(static_cast<std::size_t>(k), 1.0); }

constexpr double kClosed = 1e-9;
constexpr double kQuad = 1e-6;

struct Builder {
  std::vector<IdentityRecord> out;

  void add(std::string id, std::string loc, std::string desc, double tol, Trust trust, std::vector<PlanTerm> lhs,
           std::vector<PlanTerm> rhs) {
    IdentityRecord r;
    r.id = std::move(id);
    r.paper_location = std::move(loc);
    r.description = std::move(desc);
    r.tolerance = tol;
    r.trust = trust;
    r.lhs.terms = std::move(lhs);
    r.rhs.terms = std::move(rhs);
    out.push_back(std::move(r));
  }
};

void rational_halfline(Builder& b) {
  const Complex one_i{0.0, 1.0};
  const auto ex1 = spec(2, {one_i, one_i}, {1, 2}, 1);
  b.add("T1-EX1", "int int e^{-x-y}cos(x+y)/(2x+y) = log(2)/2", "cosine part of the 2-D exponential form",
        kQuad, Trust::Asserted, {cube1(ex1, Part::Real)}, {cst("(/ log2 2)")});
  b.add("T1-EX1-SIN", "int int e^{-x-y}sin(x+y)/(2x+y) = log(2)/2", "sine part of the 2-D exponential form",
        kQuad, Trust::Asserted, {cube1(ex1, Part::Imag, -1.0)}, {cst("(/ log2 2)")});
  b.add("T1-EX1-CF", "int dx/((x+1+i)(2x+1+i)) = (1/2 - i/2)log(2)", "closed form of the same integral",
        kClosed, Trust::Asserted, {hl({lf(1, 1, 1), lf(2, 1, 1)})}, {cst("(* (- 0.5 (* 0.5 i)) log2)")});

  const auto ex2 = spec(3, {one_i, one_i, {1.0, 1.0}}, {1, 2, 1}, 1);
  b.add("T1-EX2A", "int int int e^{-x-y-2z}cos(x+y+z)/(x+2y+z) = (1/40)(pi - 2arctan(4/3) + 4arctanh(3/253))",
        "printed triple-integral cosine constant", kQuad, Trust::SuspectedTypo, {cube1(ex2, Part::Real)},
        {cst("(* (/ 1 40) (+ (- pi (* 2 (atan (/ 4 3)))) (* 4 (atanh (/ 3 253)))))")});
  b.add("T1-EX2B", "int int int e^{-x-y-2z}sin(x+y+z)/(x+2y+z) = -(1/40)(3pi + log(25) - 6(log(8) + arctan(4/3)))",
        "printed triple-integral sine constant", kQuad, Trust::SuspectedTypo, {cube1(ex2, Part::Imag, -1.0)},
        {cst("(neg (* (/ 1 40) (- (+ (* 3 pi) (log 25)) (* 6 (+ (log 8) (atan (/ 4 3)))))))")});
  b.add("T1-EX2-CF", "int dx/((x+1+i)(2x+1+i)(x+2+i))", "triple integral against its closed form", kQuad,
        Trust::Asserted, {cube1(ex2)}, {hl({lf(1, 1, 1), lf(2, 1, 1), lf(1, 2, 1)})});

  const auto ex3 = spec(3, {3, 2, 1}, {1, 2, 3}, 1);
  b.add("T1-EX3", "int int int x^3y^2z/(-log(xy^2z^3)) = (1/50)log(2187/512)", "unit-cube form of the cubic example",
        1e-7, Trust::Asserted, {cube1(ex3)}, {cst("(* (/ 1 50) (log (/ 2187 512)))")});
  b.add("T1-EX3-CF", "int dx/((x+4)(2x+3)(3x+2)) = (1/50)log(2187/512)", "closed form of the cubic example",
        kClosed, Trust::Asserted, {hl({lf(1, 4, 0), lf(2, 3, 0), lf(3, 2, 0)})},
        {cst("(* (/ 1 50) (log (/ 2187 512)))")});

  for (int n = 2; n <= 6; ++n) {
    const auto s = spec(n, fill(n, one_i), ones(n), 1);
    const std::string N = std::to_string(n);
    b.add("T1-EX4-COS-N" + N, "int e^{-sum x}cos(sum x)/sum x = 2^{(1-n)/2}/(n-1) cos(pi(n-1)/4), n=" + N,
          "n-fold cosine family", kQuad, Trust::Asserted, {cube1(s, Part::Real)},
          {cst(fmt("(/ (* (pow 2 (/ (- 1 %g) 2)) (cos (* (/ pi 4) (- %g 1)))) (- %g 1))", n, n, n))});
    b.add("T1-EX4-SIN-N" + N, "int e^{-sum x}sin(sum x)/sum x = 2^{(1-n)/2}/(n-1) sin(pi(n-1)/4), n=" + N,
          "n-fold sine family", kQuad, Trust::Asserted, {cube1(s, Part::Imag, -1.0)},
          {cst(fmt("(/ (* (pow 2 (/ (- 1 %g) 2)) (sin (* (/ pi 4) (- %g 1)))) (- %g 1))", n, n, n))});
  }
  b.add("T1-EX4-N2015", "2015-fold sine integral = -2^{-1007}/2014", "closed form only, log-scale powers", kClosed,
        Trust::Asserted, {hl({lf(1, 1, 1, 2015)}, Part::Imag, -1.0)}, {cst("(/ (neg (pow 2 -1007)) 2014)")});

  for (int n = 2; n <= 6; ++n) {
    const std::string N = std::to_string(n);
    b.add("T1-EX5-N" + N, "int -1/log(prod x) = int dx/(x+1)^n = 1/(n-1), n=" + N, "n-fold log kernel", kQuad,
          Trust::Asserted, {cube1(spec(n, fill(n, 0.0), ones(n), 1))}, {cst(fmt("(/ 1 %g)", n - 1))});
  }
}

void log_power_kernels(Builder& b) {
  const std::pair<int, int> nk[] = {{3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3}};
  for (auto [n, k] : nk) {
    double prod = 1.0;
    for (int i = 1; i <= k; ++i) prod *= n - i;
    const std::string id = "T2-EX1-N" + std::to_string(n) + "-K" + std::to_string(k);
    b.add(id, "int (-1)^k/log^k(prod x) = 1/((n-1)(n-2)...(n-k)), n=" + std::to_string(n) + ", k=" + std::to_string(k),
          "log-power kernel", kQuad, Trust::Asserted, {cube1(spec(n, fill(n, 0.0), ones(n), k))},
          {cst(fmt("(/ 1 %g)", prod))});
  }
  for (int n = 3; n <= 6; ++n) {
    double fact = 1.0;
    for (int i = 2; i < n; ++i) fact *= i;
    b.add("T2-EX2-N" + std::to_string(n), "int (-1)^{n-1}/log^{n-1}(prod x) = 1/(n-1)!, n=" + std::to_string(n),
          "log power one below the dimension", kQuad, Trust::Asserted, {cube1(spec(n, fill(n, 0.0), ones(n), n - 1))},
          {cst(fmt("(/ 1 %g)", fact))});
  }
  b.add("T2-EX3", "1500-fold int 1/log^2(prod x) = 1/2245502", "j=2, k=1500 via int s/(s+1)^1500", 1e-14,
        Trust::Asserted, {hl({lf(1, 1, 0, 1500)}, Part::Value, 1.0, {0.0, 1.0})}, {cst("(/ 1 2245502)")});
}

void exponential_weight(Builder& b) {
  for (int n = 2; n <= 5; ++n) {
    const std::string N = std::to_string(n);
    const std::string rhs = fmt("(/ (+ -1 (* e %g (expint %g 1))) %g)", n, n - 1, n - 1);
    b.add("T99-EX1-N" + N, "int int e^{-x-y}/(x+y+1)^n = (-1+enE_{n-1}(1))/(n-1), n=" + N, "2-fold exponential form",
          kQuad, Trust::Asserted, {cube1(spec(2, {0.0, 0.0}, {1, 1}, n, 1.0))}, {cst(rhs)});
    b.add("T99-EX1-CF-N" + N, "int s e^{-s}/(s+1)^n = (-1+enE_{n-1}(1))/(n-1), n=" + N,
          "radial reduction through the complex exponential integral", kClosed, Trust::Asserted,
          {hl({lf(1, 1, 0, n)}, Part::Value, 1.0, {0.0, 1.0}, 1.0)}, {cst(rhs)});
    b.add("T99-EX1-ALT-N" + N, "n-fold int e^{-sum x}/(1+sum x)^2 = (-1+enE_{n-1}(1))/(n-1), n=" + N,
          "n-fold reading of the same example", kQuad, Trust::Asserted, {cube1(spec(n, fill(n, 0.0), ones(n), 2, 1.0))},
          {cst(rhs)});
  }

  const auto cor3 = with_geo(spec(2, {0.0, 0.0}, {1, 1}, 1, 1.0), 1.0, {1, 1});
  const std::string tail = "(- (/ 1 n) (expint-scaled 1 n))";
  b.add("COR3-K2", "int int 1/((1-xy)(1-log(xy))) = sum (1/n - e^n int_n^inf e^{-x}/x dx)",
        "k=2 case against the exponential-integral series", kQuad, Trust::Asserted, {cube1(cor3)},
        {ser(custom(tail, 1))});
  b.add("COR3-1D", "int -log(x)/((1-x)(1-log(x))) = sum (1/n - e^n E_1(n))", "one-dimensional form", kQuad,
        Trust::Asserted,
        {cube1(with_poly(with_geo(spec(1, {0.0}, {1}, 1, 1.0), 1.0, {1}), {{-1.0, {1}}}))}, {ser(custom(tail, 1))});
  b.add("COR3-GAMMA", "sum (1/n - e^n E_1(n)) = gamma + sum (log(1+1/n) - e^n E_1(n))", "gamma split of the series",
        kClosed, Trust::Asserted, {ser(custom(tail, 1))},
        {cst("euler_gamma"), ser(custom("(- (log (+ 1 (/ 1 n))) (expint-scaled 1 n))", 1))});
  b.add("COR3-ALPHA2", "int -log(x)x^{a-1}/((1-x^a)(1-log(x))) = sum (1/(an) - e^{an}E_1(an)), a=2",
        "alpha-generalization at alpha = 2", kQuad, Trust::Asserted,
        {cube1(with_poly(with_geo(spec(1, {1.0}, {1}, 1, 1.0), 1.0, {2}), {{-1.0, {1}}}))},
        {ser(custom("(- (/ 1 (* 2 n)) (expint-scaled 1 (* 2 n)))", 1))});
}

void geometric_kernels(Builder& b) {
  // a=1, b=1, c=1, d=2, g=1, h=1, r=1/2
  const auto s0 = with_geo(spec(2, {0.0, 0.0}, {1, 2}, 1), 0.5, {1, 1});
  const std::string printed_a =
      "(/ (- (log 2) (log (/ (+ n 1) (+ n 1)))) (+ (neg (+ n 1)) 2 (* 2 n)))";
  SeriesSpec geo_a = family(SeriesFamily::GeometricOfHalfline, {{"r_re", 0.5}, {"r_im", 0.0}});
  geo_a.halfline_terms.push_back({1.0, {{1.0, {1.0, 0.0}, {1.0, 0.0}, 1}, {2.0, {1.0, 0.0}, {1.0, 0.0}, 1}}, {1.0}, 0.0, 0.0});
  b.add("COR0-A", "-int int x^{b-1}y^{g-1}/((1-rx^cy^h)log(x^ay^d)) = sum r^n (log(d/a) - log((hn+g)/(cn+b)))/(-a(hn+g)+bd+cdn)",
        "a=1, b=1, c=1, d=2, g=1, h=1, r=1/2", kQuad, Trust::Asserted, {cube1(s0)}, {ser(custom(printed_a, 0, 0.5))});
  b.add("COR0-A-HL", "sum r^n int dx/((ax+b+cn)(dx+g+hn))", "series of half-line integrals against the printed series",
        kClosed, Trust::Asserted, {ser(geo_a)}, {ser(custom(printed_a, 0, 0.5))});
  // second display, read with y^{e-1} and geometric factor x^c y^h; a=1, b=1, c=1, d=2, e=1, h=1
  const auto s1 = with_geo(spec(2, {}, {1, 2}, 1), 0.5, {1, 1});
  b.add("COR0-B", "int int x^{b-1}y^{e-1}(x^ay^d-1)/((1-rx^cy^h)log(x^ay^d)) = sum r^n log((b+cn)(d+e+hn)/((a+b+cn)(e+hn)))/(bd-ae+cdn-ahn)",
        "a=1, b=1, c=1, d=2, e=1, h=1, r=1/2", kQuad, Trust::Asserted,
        {cube(terms_of(s1, {{1.0, {0.0, 0.0}}, {-1.0, {1.0, 2.0}}}))},
        {ser(custom("(/ (log (/ (* (+ 1 n) (+ 3 n)) (* (+ 2 n) (+ 1 n)))) (+ 1 n))", 0, 0.5))});

  // sum_n Im int dx/(x+n+1+i)^2 = -sum 1/((n+1)^2+1)
  SeriesSpec coth = family(SeriesFamily::GeometricOfHalfline, {{"r_re", 1.0}, {"r_im", 0.0}, {"part", 2.0}});
  coth.halfline_terms.push_back({1.0, {{1.0, {1.0, 1.0}, {1.0, 0.0}, 2}}, {1.0}, 0.0, 0.0});
  coth.acceleration = Acceleration::TailIntegralBound;
  const std::string coth_rhs = "(* 0.5 (- (* pi (coth pi)) 1))";
  b.add("COR1-COTH", "sum 1/((n+1)^2+1) = (1/2)(pi coth(pi) - 1)", "series of half-line integrals, all parameters 1",
        kClosed, Trust::Asserted, {ser(coth, Part::Value, -1.0)}, {cst(coth_rhs)});
  const auto sc = with_geo(spec(2, {{0.0, 1.0}, {0.0, 1.0}}, {1, 1}, 1), 1.0, {1, 1});
  b.add("COR1-COTH-CUBE", "int int sin(log(xy))/((1-xy)log(xy)) = (1/2)(pi coth(pi) - 1)",
        "sign-corrected double integral", kQuad, Trust::Asserted, {cube1(sc, Part::Imag, -1.0)}, {cst(coth_rhs)});
  b.add("COR1-COTH-PRINTED", "int int -sin(log(xy))/((1-xy)log(xy)) = (1/2)(pi coth(pi) - 1)",
        "double integral as printed", kQuad, Trust::SuspectedTypo, {cube1(sc, Part::Imag)}, {cst(coth_rhs)});
  b.add("COR1-SUBST", "int_0^inf sin(x)/(1-e^x) dx = (1/2)(-pi coth(pi) + 1)", "substituted one-dimensional form",
        kQuad, Trust::Asserted, {cube1(with_geo(spec(1, {{0.0, 1.0}}, {1}, 0), 1.0, {1}), Part::Imag)},
        {cst("(* 0.5 (- 1 (* pi (coth pi))))")});
}

void alt_log_and_trig(Builder& b) {
  const std::string g16 = "(log (/ (gamma (/ 1 6)) (* (sqrt pi) (gamma (/ 2 3)))))";
  b.add("T4-GAMMA16", "log(prod ((3n+3)/(3n+1))^{(-1)^n}) = log(Gamma(1/6)/(sqrt(pi)Gamma(2/3)))",
        "alternating log-product, a=3, b=3, c=1", kClosed, Trust::Asserted,
        {ser(family(SeriesFamily::AltLogProduct, {{"a", 3}, {"b", 3}, {"c", 1}}))}, {cst(g16)});
  b.add("T4-GAMMA16-CUBE", "int (x^2-1)/((1+x^3)log(x)) = log(Gamma(1/6)/(sqrt(pi)Gamma(2/3)))",
        "one-dimensional integral", kQuad, Trust::Asserted,
        {cube(terms_of(with_geo(spec(1, {}, {1}, 1), -1.0, {3}), {{-1.0, {2.0}}, {1.0, {0.0}}}))}, {cst(g16)});
  b.add("T4-WALLIS", "log(prod ((n+2)/(n+1))^{(-1)^n}) = log(pi/2)", "Wallis product, a=1, b=2, c=1", kClosed,
        Trust::Asserted, {ser(family(SeriesFamily::AltLogProduct, {{"a", 1}, {"b", 2}, {"c", 1}}))},
        {cst("(log (/ pi 2))")});

  b.add("T5-FIRST", "int x^{(bc+c-d)/d}(1-x^{(ad-bc-c+d)/d})/(-(ad-bc-c+d)log(x)) = int dx/((cx+a+1)(dx+b+1))",
        "a=1, b=2, c=1, d=3", kQuad, Trust::Asserted,
        {cube(terms_of(spec(1, {}, {1}, 1), {{1.0 / 3.0, {0.0}}, {-1.0 / 3.0, {1.0}}}))},
        {hl({lf(1, 2, 0), lf(3, 3, 0)})});
  b.add("T5-DIRICHLET", "int_0^inf sin(x)/x dx = pi/2", "Re int dx/((x-i)(x+i)), a=-1, b=1", kClosed,
        Trust::Asserted, {hl({lf(1, 0, -1), lf(1, 0, 1)}, Part::Real)}, {cst("(/ pi 2)")});
  b.add("T5-COS", "int_0^inf (cos(bx)-cos(ax))/((a-b)x) dx = Im int dx/((x+ai)(x+bi))",
        "a=1, b=2; left side is the Frullani value log 2", kClosed, Trust::SuspectedTypo, {cst("log2")},
        {hl({lf(1, 0, 1), lf(1, 0, 2)}, Part::Imag)});
}

void number_theory(Builder& b) {
  struct Phi {
    const char* id;
    double z;
    int s;
    double a;
  };
  for (const Phi& p : {Phi{"NT-PHI-HALF", 0.5, 2, 1.0}, Phi{"NT-PHI-ALT", -1.0, 2, 1.0}}) {
    const int k = p.s + 1;
    const auto c = with_geo(spec(k, fill(k, p.a - 1.0), ones(k), 1), p.z, ones(k));
    const std::string rhs = fmt("(lerch %.17g %g %g)", p.z, p.s, p.a);
    b.add(p.id, fmt("Phi(z,s,a) = (s+1)-fold int -s prod x^{a-1}/((1-z prod x)log(prod x)), z=%g, s=%g, a=%g", p.z, p.s, p.a),
          "unit-cube form of the Lerch transcendent", kQuad, Trust::Asserted, {cube1(c, Part::Value, p.s)}, {cst(rhs)});
    SeriesSpec hs = family(SeriesFamily::GeometricOfHalfline, {{"r_re", p.z}, {"r_im", 0.0}});
    hs.halfline_terms.push_back({static_cast<double>(p.s), {{1.0, {p.a, 0.0}, {1.0, 0.0}, p.s + 1}}, {1.0}, 0.0, 0.0});
    b.add(std::string(p.id) + "-HL", fmt("Phi(z,s,a) = s sum z^k int dx/(x+k+a)^{s+1}, z=%g, s=%g, a=%g", p.z, p.s, p.a),
          "series of half-line integrals", kClosed, Trust::Asserted, {ser(hs)}, {cst(rhs)});
  }
  for (int s : {2, 3}) {
    const int k = s + 1;
    b.add("NT-ZETA-S" + std::to_string(s), "zeta(s) = (s+1)-fold int -s/((1-prod x)log(prod x)), s=" + std::to_string(s),
          "unit-cube form of zeta", kQuad, Trust::Asserted,
          {cube1(with_geo(spec(k, fill(k, 0.0), ones(k), 1), 1.0, ones(k)), Part::Value, s)},
          {cst("(zeta " + std::to_string(s) + ")")});
  }
  b.add("NT-ZETA-INT", "(s/(s-1)) sum 1/n^{s-1} = sum int dx/(x/s+n)^s, s=3", "series of half-line integrals", kClosed,
        Trust::Asserted, {ser(family(SeriesFamily::ZetaOfIntegrals, {{"s", 3}}))}, {cst("(* 1.5 (zeta 2))")});

  const auto z3 = with_poly(with_geo(spec(2, {0.0, 0.0}, {1, 1}, 1), 1.0, {1, 1}), {{1.0, {0, 2}}});
  b.add("GS-T6-ZETA3", "zeta(3) = -3/2 int int log^2(y)/((1-xy)log(xy))", "s=3 of the Gamma-weighted form", kQuad,
        Trust::Asserted, {cube1(z3, Part::Value, 1.5)}, {cst("(zeta 3)")});
  const auto phi = with_poly(with_geo(spec(2, {0.0, 0.0}, {1, 1}, 1), 0.5, {1, 1}), {{-1.0, {0, 1}}});
  b.add("GS-T6-PHI", "Phi(z,s,a)Gamma(s) = int int -s(xy)^{a-1}(-log(y))^{s-1}/((1-zxy)log(xy)), z=1/2, s=2, a=1",
        "Lerch double integral", kQuad, Trust::Asserted, {cube1(phi, Part::Value, 2.0)}, {cst("(lerch 0.5 2 1)")});
  const auto cat3 = with_geo(spec(3, fill(3, -0.5), ones(3), 1), -1.0, ones(3));
  b.add("GS-T6-CATALAN", "G = (1/2) int int int -1/(sqrt(xyz)(1+xyz)log(xyz))", "triple-integral Catalan constant", kQuad,
        Trust::Asserted, {cube1(cat3, Part::Value, 0.5)}, {cst("catalan")});
  const auto cat2 = with_poly(with_geo(spec(2, {-0.5, -0.5}, {1, 1}, 1), -1.0, {1, 1}), {{1.0, {0, 1}}});
  b.add("GS-T6-CATALAN-2D", "G = int int log(y)/(2sqrt(xy)(1+xy)log(xy))", "double-integral Catalan constant", kQuad,
        Trust::Asserted, {cube1(cat2, Part::Value, -0.5)}, {cst("catalan")});
  const auto pi = with_geo(spec(2, {-0.75, -0.75}, {1, 1}, 1), -1.0, {1, 1});
  const std::string pi_rhs = "(/ (+ pi (* 2 (acoth (sqrt 2)))) (sqrt 2))";
  b.add("GS-T6-PI", "int int -1/((xy)^{3/4}(1+xy)log(xy)) = (pi + 2coth^{-1}(sqrt(2)))/sqrt(2)",
        "z=-1, s=1, a=1/4", kQuad, Trust::Asserted, {cube1(pi)}, {cst(pi_rhs)});
  b.add("GS-T6-PI-LERCH", "Phi(-1,1,1/4) = (pi + 2coth^{-1}(sqrt(2)))/sqrt(2)", "alternating Lerch series at s=1",
        kClosed, Trust::Asserted,
        {ser(family(SeriesFamily::Lerch, {{"z_re", -1.0}, {"z_im", 0.0}, {"s", 1.0}, {"a", 0.25}}))}, {cst(pi_rhs)});

  auto z7 = with_poly(with_geo(spec(2, {0.0, 0.0}, {1, 1}, 1), 1.0, {1, 1}), {{12, {1, 5}}, {30, {2, 4}}, {20, {3, 3}}});
  b.add("T7-ZETA7", "zeta(7) = -7/3600 int int log(x)log(y)(12log^4(y) + 30log(x)log^3(y) + 20log^2(x)log^2(y))/((1-xy)log(xy))",
        "log-moment kernel series", kQuad, Trust::Asserted,
        {cube({{1.0, z7}}, Part::Value, 7.0 / 3600.0, CubeMethod::Series)}, {cst("(zeta 7)")});
  auto t7 = with_poly(with_geo(spec(2, {0.0, 0.0}, {1, 1}, 1), 0.5, {1, 1}), {{3, {1, 2}}, {3, {2, 1}}});
  b.add("T7-PHI-S4", "((s-2)(-1)^s/s)Phi(z,s,a)Gamma(s) = int int (xy)^{a-1}/((1-zxy)log(xy)) sum binom(s-1,k)log^k(x)log^{s-k-1}(y), z=1/2, s=4, a=1",
        "binomial log-moment form", kQuad, Trust::Asserted, {cube1(t7, Part::Value, -1.0 / 3.0)},
        {cst("(lerch 0.5 4 1)")});
}

void gamma_digamma(Builder& b) {
  const auto g = with_geo(spec(2, {}, {1, 1}, 1), 1.0, {1, 1});
  b.add("GAMMA-SONDOW", "gamma = -int int (1-x)/((1-xy)log(xy))", "Sondow double integral", kQuad, Trust::Asserted,
        {cube(terms_of(g, {{1.0, {0.0, 0.0}}, {-1.0, {1.0, 0.0}}}))}, {cst("euler_gamma")});
  b.add("GAMMA-SONDOW-SERIES", "sum (1/(n+1) - log((n+2)/(n+1))) = gamma", "defining series of gamma", kClosed,
        Trust::Asserted, {ser(family(SeriesFamily::EulerGamma, {}))}, {cst("euler_gamma")});

  const auto t8a = with_geo(spec(2, {}, {1, 1}, 1), 1.0, {2, 2});
  b.add("T8-A", "int int (xy)^2((xy)^{-1}-x)/(-(1-(xy)^2)log(xy)) = -log(sqrt(pi)/2) + gamma/2", "a=2, b=2, c=1, d=0",
        kQuad, Trust::Asserted, {cube(terms_of(t8a, {{1.0, {1.0, 1.0}}, {-1.0, {3.0, 2.0}}}))},
        {cst("(+ (neg (log (/ (sqrt pi) 2))) (/ euler_gamma 2))")});
  b.add("T8-A-SERIES", "sum (1/(bn+d) - log(1+(c-a)/(bn+a))/(c-a)) = -log(sqrt(pi)/2) + gamma/2",
        "a=2, b=2, c=1, d=0 series", kClosed, Trust::Asserted,
        {ser(custom("(+ (/ 1 (* 2 n)) (log (- 1 (/ 1 (+ (* 2 n) 2)))))", 1))},
        {cst("(+ (neg (log (/ (sqrt pi) 2))) (/ euler_gamma 2))")});
  const auto t8b = with_geo(spec(2, {}, {1, 1}, 1), 1.0, {5, 5});
  b.add("T8-B", "int int (xy)^5((xy)^9-x^3y^7)/(-(1-(xy)^5)log(xy)) = (1/4)log(Gamma(13/5)/Gamma(9/5)) + gamma/5 - 3/10",
        "a=4, b=5, c=8, d=10", kQuad, Trust::Asserted,
        {cube(terms_of(t8b, {{1.0, {14.0, 14.0}}, {-1.0, {8.0, 12.0}}}))},
        {cst("(+ (* 0.25 (log (/ (gamma (/ 13 5)) (gamma (/ 9 5))))) (/ euler_gamma 5) (/ -3 10))")});

  for (double s : {0.5, 1.0, 2.0, 3.0}) {
    b.add(fmt("T9-PSI-S%g", s), fmt("psi(s) = int int ((xy)^{s-1}-y)/((1-xy)log(xy)), s=%g", s),
          "digamma double integral", kQuad, Trust::Asserted,
          {cube(terms_of(g, {{-1.0, {s - 1.0, s - 1.0}}, {1.0, {0.0, 1.0}}}))}, {cst(fmt("(digamma %g)", s))});
  }

  struct Psi {
    const char* loc;
    double q;
    bool alternating;
    bool second;
    double shift;
    const char* rhs;
  };
  const Psi sums[] = {
      {"sum psi(n)/(n(n+1)) = 1 - gamma", 1, false, true, 1, "(- 1 euler_gamma)"},
      {"sum psi(n/2)/(n(n+1)) = 2 - gamma - pi^2/6 - log^2(2)", 2, false, true, 1,
       "(- 2 euler_gamma (/ (* pi pi) 6) (* log2 log2))"},
      {"sum psi(n/4)/(n(n+1)) = 4 - 2G - gamma - 19pi^2/48 + (pi/4)log(2) - (5/4)log^2(2)", 4, false, true, 1,
       "(+ (- 4 (* 2 catalan) euler_gamma (/ (* 19 pi pi) 48)) (* (/ pi 4) log2) (* -1.25 log2 log2))"},
      {"sum (-1)^n psi(n)/n = (1/2)log(2)(2gamma + log(2))", 1, true, false, 0,
       "(* 0.5 log2 (+ (* 2 euler_gamma) log2))"},
      {"sum (-1)^n psi(n/2)/n = pi^2/12 + log(2)(gamma + log(2))", 2, true, false, 0,
       "(+ (/ (* pi pi) 12) (* log2 (+ euler_gamma log2)))"},
      {"sum (-1)^n psi(n/4)/n = 11pi^2/48 + gamma log(2) + (7/4)log^2(2)", 4, true, false, 0,
       "(+ (/ (* 11 pi pi) 48) (* euler_gamma log2) (* 1.75 log2 log2))"},
      {"sum psi(n)/n^2 = -(pi^2/6)gamma + zeta(3)", 1, false, true, 0, "(- (zeta 3) (/ (* pi pi euler_gamma) 6))"},
      {"sum psi(n)/(n(n+2)) = 7/8 - (3/4)gamma", 1, false, true, 2, "(- 0.875 (* 0.75 euler_gamma))"},
      {"sum psi(n/2)/(n(n+2)) = 3/4 - (3/4)gamma - log(2)", 2, false, true, 2, "(- 0.75 (* 0.75 euler_gamma) log2)"},
      {"sum psi(n/4)/(n(n+2)) = (1/48)(-36gamma + (12-11pi)pi - 12(-6 + log^2(2) + 6log(2)))", 4, false, true, 2,
       "(/ (- (+ (* -36 euler_gamma) (* (- 12 (* 11 pi)) pi)) (* 12 (+ -6 (* log2 log2) (* 6 log2)))) 48)"},
  };
  int idx = 0;
  for (const Psi& p : sums) {
    ++idx;
    char id[16];
    std::snprintf(id, sizeof id, "T9-SUM-%02d", idx);
    b.add(id, p.loc, "direct summation with asymptotic tail", kClosed, Trust::Asserted,
          {ser(family(SeriesFamily::PsiSum, {{"q", p.q},
                                             {"alternating", p.alternating ? 1.0 : 0.0},
                                             {"second", p.second ? 1.0 : 0.0},
                                             {"shift", p.shift}}))},
          {cst(p.rhs)});
  }
}

std::vector<LinearFactor> factors_of(RamanujanFamily f, double param, int k) {
  return ramanujan_factors(f, param, k).factors;
}

void ramanujan(Builder& b) {
  for (double r : {0.25, 0.5}) {
    for (int k = 1; k <= 4; ++k) {
      std::string theta = "(+ 1";
      for (int m = 1; m < k; ++m) theta += fmt(" (pow %g %g)", r, m * (m + 1) / 2);
      theta += ")";
      b.add(fmt("RAM-1-K%g-R%g", k, r),
            fmt("int dx/((1+x^2)(1+r^2x^2)...) = pi/(2(1+r+r^3+...+r^{k(k-1)/2})), k=%g, r=%g", k, r),
            "finite-k truncation against the truncated theta sum", kClosed, Trust::SuspectedTypo,
            {hl(factors_of(RamanujanFamily::Geometric, r, k))}, {cst("(/ pi (* 2 " + theta + "))")});
    }
  }
  // (1+x^2)(1+r^2x^2)(1+r^4x^3) with y = r^{4/3}x: 1 + y^3 = (y+1)(y - e^{i pi/3})(y - e^{-i pi/3})
  const double r = 0.5;
  const double s = std::pow(r, 4.0 / 3.0);
  const double h = std::sqrt(3.0) / 2.0;
  b.add("RAM-1-X3", "int dx/((1+x^2)(1+r^2x^2)(1+r^4x^3)) = pi/(2(1+r+r^3)), r=1/2", "cubic third factor as printed",
        kClosed, Trust::SuspectedTypo,
        {hl({lf(1, 0, 1), lf(1, 0, -1), lf(r, 0, 1), lf(r, 0, -1), lf(s, 1, 0), lf(s, -0.5, h), lf(s, -0.5, -h)})},
        {cst("(/ pi (* 2 (+ 1 0.5 0.125)))")});

  for (int k = 1; k <= 6; ++k) {
    const std::string suffix = k == 6 ? "-SIN" : fmt("-K%g-SIN", k);
    b.add("RAM-1" + suffix, fmt("2k-fold int sin(sum (-1)^{n+1}x_n)/sum r^{n-1}(x_{2n}+x_{2n-1}) = 0, k=%g, r=1/2", k),
          "sine part vanishes by conjugate pairing", 1e-10, Trust::Asserted,
          {hl(factors_of(RamanujanFamily::Geometric, 0.5, k), Part::Imag)}, {cst("0")});
    b.add("RAM-2" + suffix, fmt("2k-fold int sin(sum (-1)^{n+1}x_n)/sum (x_{2n}+x_{2n-1})/(a+n-1) = 0, k=%g, a=1", k),
          "sine part vanishes by conjugate pairing", 1e-10, Trust::Asserted,
          {hl(factors_of(RamanujanFamily::Shifted, 1.0, k), Part::Imag)}, {cst("0")});
  }
  for (double a : {1.0, 1.5}) {
    b.add(fmt("RAM-2-A%g", a),
          fmt("lim_k int dx/((1+x^2/a^2)(1+x^2/(a+1)^2)...) = (1/2)sqrt(pi)Gamma(a+1/2)/Gamma(a), a=%g", a),
          "limit by Richardson extrapolation in k = 4..64", kQuad, Trust::Asserted,
          {ser(family(SeriesFamily::ProductLimit, {{"a", a}, {"kmin", 4}, {"kmax", 64}}))},
          {cst(fmt("(* 0.5 (sqrt pi) (/ (gamma %.17g) (gamma %.17g)))", a + 0.5, a))});
  }
}

}  // namespace

const Registry& builtin_registry() {
  static const Registry reg = [] {
    Builder b;
    rational_halfline(b);
    log_power_kernels(b);
    exponential_weight(b);
    geometric_kernels(b);
    alt_log_and_trig(b);
    number_theory(b);
    gamma_digamma(b);
    ramanujan(b);
    return Registry(std::move(b.out), kBuiltinRegistryVersion);
  }();
  return reg;
}

}  // namespace squarint
