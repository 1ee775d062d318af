#pragma once

// Independent reference quadrature for the tests: globally adaptive
// Gauss–Kronrod (7, 15) with bisection. Shares nothing with the library's
// double-exponential rules.

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

struct GKResult {
  Complex value{};
  double error = 0.0;
  int intervals = 0;
};

namespace detail {

inline constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                  0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                  0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                  0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                  0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                  0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                  0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                 0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Piece& o) const { return error < o.error; }
};

template <class F>
Piece rule(const F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const Complex fc = f(c);
  Complex k = wgk[7] * fc, g = wg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const Complex s = f(c - h * xgk[j]) + f(c + h * xgk[j]);
    k += wgk[j] * s;
    if (j % 2 == 1) g += wg[j / 2] * s;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

}  // namespace detail

/// ∫_a^b f, bisecting the worst interval until the summed error is below
/// max(abs_tol, rel_tol·|I|).
template <class F>
GKResult integrate(const F& f, double a, double b, double abs_tol = 1e-13, double rel_tol = 1e-13,
                   int max_intervals = 20000) {
  std::priority_queue<detail::Piece> q;
  q.push(detail::rule(f, a, b));
  Complex total = q.top().value;
  double err = q.top().error;
  while (err > std::max(abs_tol, rel_tol * std::abs(total)) && static_cast<int>(q.size()) < max_intervals) {
    const detail::Piece p = q.top();
    q.pop();
    const double m = 0.5 * (p.a + p.b);
    const detail::Piece l = detail::rule(f, p.a, m), r = detail::rule(f, m, p.b);
    total += l.value + r.value - p.value;
    err += l.error + r.error - p.error;
    q.push(l);
    q.push(r);
  }
  // recompute the sums from scratch to drop the running cancellation
  GKResult out;
  out.intervals = static_cast<int>(q.size());
  while (!q.empty()) {
    out.value += q.top().value;
    out.error += q.top().error;
    q.pop();
  }
  return out;
}

/// ∫_a^∞ f through x = a + t/(1 − t).
template <class F>
GKResult integrate_to_infinity(const F& f, double a = 0.0, double abs_tol = 1e-13, double rel_tol = 1e-13) {
  auto g = [&](double t) -> Complex {
    const double u = 1.0 - t;
    if (u <= 0.0) return 0.0;
    return f(a + t / u) / (u * u);
  };
  return integrate(g, 0.0, 1.0, abs_tol, rel_tol);
}

/// ∫₀^∞∫₀^∞ f(s, t) as an iterated integral.
template <class F>
GKResult integrate_orthant2(const F& f, double tol = 1e-12) {
  double inner_err = 0.0;
  auto outer = [&](double s) -> Complex {
    const GKResult r = integrate_to_infinity([&](double t) { return f(s, t); }, 0.0, 0.1 * tol, 0.1 * tol);
    inner_err = std::max(inner_err, r.error);
    return r.value;
  };
  GKResult r = integrate_to_infinity(outer, 0.0, tol, tol);
  r.error += inner_err;
  return r;
}

}  // namespace oracle
