#include "squarint/series.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "squarint/errors.hpp"
#include "squarint/halfline.hpp"
#include "squarint/quadrature.hpp"
#include "squarint/special.hpp"

namespace squarint {

namespace {

std::string fmt_e(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Neville table for S(h) = S + c₁h + c₂h² + …, h halving each row.
struct Richardson {
  std::vector<std::vector<Complex>> rows;

  Complex push(Complex v) {
    std::vector<Complex> row{v};
    if (!rows.empty()) {
      const auto& prev = rows.back();
      for (std::size_t j = 1; j <= prev.size(); ++j) {
        const double f = std::ldexp(1.0, static_cast<int>(j)) - 1.0;
        row.push_back(row[j - 1] + (row[j - 1] - prev[j - 1]) / f);
      }
    }
    rows.push_back(std::move(row));
    return rows.back().back();
  }
  double change() const {
    if (rows.size() < 2) return INFINITY;
    return std::abs(rows.back().back() - rows[rows.size() - 2].back());
  }
};

SeriesEval sum_inside(Complex z, const std::function<Complex(long long)>& f, long long start, const SeriesOptions& opt) {
  const double az = std::abs(z);
  Complex s = 0.0;
  Complex zn = std::pow(z, static_cast<double>(start));
  int small = 0;
  for (long long n = start; n - start < opt.max_terms; ++n) {
    const Complex t = zn * f(n);
    s += t;
    zn *= z;
    // remainder ≲ |t|·|z|/(1−|z|) once |f| stops growing
    const double bound = std::abs(t) * az / (1.0 - az);
    if (bound <= opt.tolerance * std::max(1.0, std::abs(s))) {
      if (++small >= 4) return {s, n - start + 1, bound, "direct"};
    } else {
      small = 0;
    }
  }
  throw Nonconvergent("geometric series exceeded the term budget of " + std::to_string(opt.max_terms));
}

SeriesEval sum_richardson(const std::function<Complex(long long)>& f, long long start, const SeriesOptions& opt) {
  Richardson tab;
  Complex partial = 0.0;
  long long n = start;
  long long N = 16;
  Complex best = 0.0;
  while (N <= opt.max_terms) {
    for (; n < start + N; ++n) partial += f(n);
    best = tab.push(partial);
    const double ch = tab.change();
    if (tab.rows.size() >= 3 && ch <= opt.tolerance * std::max(1.0, std::abs(best))) {
      return {best, N, ch, "richardson"};
    }
    if (tab.rows.size() >= 11) break;
    N *= 2;
  }
  throw Nonconvergent("Richardson extrapolation of partial sums stalled (last change " + fmt_e(tab.change()) + ")");
}

SeriesEval sum_unit_circle(Complex z, const std::function<Complex(long long)>& f, long long start) {
  constexpr long long N = 2000;
  constexpr int J = 10;
  Complex s = 0.0;
  Complex zn = std::pow(z, static_cast<double>(start));
  for (long long n = start; n < start + N; ++n) {
    s += zn * f(n);
    zn *= z;
  }
  // zn = z^{start+N}; forward differences at start+N
  std::vector<Complex> d(J + 1);
  for (int j = 0; j <= J; ++j) d[static_cast<std::size_t>(j)] = f(start + N + j);
  const Complex q = 1.0 / (1.0 - z);
  Complex tail = 0.0;
  Complex zj = q;
  double last = 0.0;
  for (int j = 0; j <= J; ++j) {
    const Complex term = zj * d[0];
    tail += term;
    last = std::abs(term);
    for (int i = 0; i < J - j; ++i) d[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i) + 1] - d[static_cast<std::size_t>(i)];
    zj *= z * q;
  }
  return {s + zn * tail, N + J + 1, last, "difference-tail"};
}

bool is(Complex z, double v) { return std::abs(z - Complex(v, 0.0)) <= 1e-15; }

Complex select(Complex v, int part) {
  if (part == 1) return {v.real(), 0.0};
  if (part == 2) return {v.imag(), 0.0};
  return v;
}

}  // namespace

SeriesEval weighted_sum(Complex z, const std::function<Complex(long long)>& f, long long start, const SeriesOptions& opt) {
  const double az = std::abs(z);
  if (az > 1.0 + 1e-15) throw DomainError("weighted_sum requires |z| <= 1");
  if (az < 1.0 - 1e-15) return sum_inside(z, f, start, opt);
  if (is(z, 1.0)) return sum_richardson(f, start, opt);
  if (is(z, -1.0)) {
    const double sign = (start % 2 == 0) ? 1.0 : -1.0;
    auto g = [&](long long k) { return f(start + k); };
    const Complex a = alternating_sum(g, 36);
    const Complex b = alternating_sum(g, 28);
    return {sign * a, 36, std::abs(a - b), "alternating-cvz"};
  }
  return sum_unit_circle(z, f, start);
}

SeriesEval psi_sum(double q, bool alternating, bool second, double shift, long long N) {
  if (!(q > 0.0)) throw DomainError("psi_sum requires q > 0");
  if (N < 100) throw DomainError("psi_sum requires N >= 100");
  auto den = [&](double x) { return second ? x * (x + shift) : x; };
  auto dden = [&](double x) { return second ? 2.0 * x + shift : 1.0; };
  auto f = [&](double x) { return digamma(x / q) / den(x); };
  auto df = [&](double x) {
    const double D = den(x);
    return trigamma(x / q) / q / D - digamma(x / q) * dden(x) / (D * D);
  };
  long double acc = 0.0L;
  for (long long n = 1; n < N; ++n) {
    const double t = f(static_cast<double>(n));
    acc += (alternating && (n % 2 == 1)) ? -static_cast<long double>(t) : static_cast<long double>(t);
  }
  const double x = static_cast<double>(N);
  double tail = 0.0;
  double est = 0.0;
  if (alternating) {
    const double sign = (N % 2 == 0) ? 1.0 : -1.0;
    tail = sign * (0.5 * f(x) - 0.25 * df(x));
    est = std::abs(df(x)) / 4.0 / x;
  } else {
    // ∫_N^∞ f = ∫₀¹ f(N/u)·N/u² du
    auto g = [&](double u) -> Complex {
      const double xx = x / u;
      if (xx > 1e150) return 0.0;
      return f(xx) * x / (u * u);
    };
    const Quad1D in = tanh_sinh(g, 0.0, 1.0, 1e-18, 1e-13);
    tail = in.value.real() + 0.5 * f(x) - df(x) / 12.0;
    est = in.error + std::abs(df(x)) / 12.0 / (x * x);
  }
  return {Complex(static_cast<double>(acc) + tail, 0.0), N, est,
          alternating ? "direct+boole-tail" : "direct+euler-maclaurin-tail"};
}

SeriesEval product_limit(double a, int kmin, int kmax) {
  if (!(a > 0.0)) throw DomainError("product_limit requires a > 0");
  if (kmin < 1 || kmax < kmin) throw DomainError("product_limit requires 1 <= kmin <= kmax");
  Richardson tab;
  Complex best = 0.0;
  int last = kmin;
  for (int k = kmin; k <= kmax; k *= 2) {
    best = tab.push(Complex(ramanujan_product_integral(RamanujanFamily::Shifted, a, k).real(), 0.0));
    last = k;
  }
  return {best, last, tab.change(), "richardson-in-k"};
}

SeriesEval evaluate_series(const SeriesSpec& spec, const SeriesOptions& opt) {
  if (auto v = validate(spec); !v.empty()) throw DomainError("invalid series: " + describe(v));
  switch (spec.family) {
    case SeriesFamily::Lerch: {
      const Complex z{spec.param("z_re"), spec.param("z_im")};
      const SeriesResult r = lerch_phi_series(z, spec.param("s"), spec.param("a"), std::max(opt.tolerance, 1e-15));
      return {r.value, r.terms_used, r.tail_bound, "lerch"};
    }
    case SeriesFamily::GeometricOfHalfline: {
      const Complex r{spec.param("r_re"), spec.param("r_im")};
      const int part = static_cast<int>(spec.param_or("part", 0.0));
      const auto start = static_cast<long long>(spec.param_or("start", 0.0));
      auto term = [&](long long n) {
        const double nn = static_cast<double>(n);
        Complex s = 0.0;
        for (const auto& t : spec.halfline_terms) s += t.coeff * integrate_rational_exp(t.at(nn), t.weight_at(nn));
        return s;
      };
      if (r.imag() == 0.0) {
        auto g = [&](long long n) { return select(term(n), part); };
        return weighted_sum(r, g, start, opt);
      }
      SeriesEval e = weighted_sum(r, term, start, opt);
      e.value = select(e.value, part);
      return e;
    }
    case SeriesFamily::EulerGamma: {
      const SeriesResult r = euler_gamma(std::max(opt.tolerance, 1e-15));
      return {r.value, r.terms_used, r.tail_bound, "euler-maclaurin"};
    }
    case SeriesFamily::AltLogProduct: {
      const SeriesResult r = alt_log_product(spec.param("a"), spec.param("b"), spec.param("c"));
      return {r.value, r.terms_used, r.tail_bound, "alternating-cvz"};
    }
    case SeriesFamily::PsiSum:
      return psi_sum(spec.param("q"), spec.param("alternating") != 0.0, spec.param("second") != 0.0,
                     spec.param("shift"));
    case SeriesFamily::ZetaOfIntegrals: {
      const double s = spec.param("s");
      if (s != std::floor(s) || s > 64) {
        return {Complex(s / (s - 1.0) * zeta(s - 1.0), 0.0), 1, 0.0, "closed-form"};
      }
      const int m = static_cast<int>(s);
      auto term = [&](long long n) {
        FactorProduct fp;
        fp.factors.push_back({1.0 / s, Complex(static_cast<double>(n), 0.0), m});
        return integrate_rational(fp);
      };
      return weighted_sum(1.0, term, 1, opt);
    }
    case SeriesFamily::CustomTerm: {
      const Complex z{spec.param_or("z_re", 1.0), spec.param_or("z_im", 0.0)};
      const auto start = static_cast<long long>(spec.param("start"));
      ExprEnv env;
      auto term = [&](long long n) {
        env["n"] = Complex(static_cast<double>(n), 0.0);
        return evaluate(*spec.term, env);
      };
      return weighted_sum(z, term, start, opt);
    }
    case SeriesFamily::ProductLimit:
      return product_limit(spec.param("a"), static_cast<int>(spec.param_or("kmin", 4.0)),
                           static_cast<int>(spec.param("kmax")));
  }
  throw DomainError("unknown series family");
}

}  // namespace squarint
