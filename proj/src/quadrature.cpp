#include "squarint/quadrature.hpp"

#include <cmath>

#include "squarint/errors.hpp"

namespace squarint {

namespace {
constexpr double kHalfPi = 1.57079632679489661923;
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre requires n >= 1");
  GaussRule r;
  r.x.resize(static_cast<std::size_t>(n));
  r.w.resize(static_cast<std::size_t>(n));
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    // map [−1,1] → [0,1]
    r.x[static_cast<std::size_t>(i)] = 0.5 * (1.0 - z);
    r.x[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (1.0 + z);
    r.w[static_cast<std::size_t>(i)] = 0.5 * w;
    r.w[static_cast<std::size_t>(n - 1 - i)] = 0.5 * w;
  }
  return r;
}

ExpSinhNode exp_sinh_node(double tau) {
  const double s = std::exp(kHalfPi * std::sinh(tau));
  return {s, s * kHalfPi * std::cosh(tau)};
}

TanhSinhNode tanh_sinh_node(double tau) {
  const double u = kHalfPi * std::sinh(tau);
  TanhSinhNode n{};
  if (u >= 0.0) {
    const double e = std::exp(-2.0 * u);
    n.x = 1.0 / (1.0 + e);
    n.cx = e / (1.0 + e);
    n.logx = -std::log1p(e);
  } else {
    const double e = std::exp(2.0 * u);
    n.x = e / (1.0 + e);
    n.cx = 1.0 / (1.0 + e);
    n.logx = 2.0 * u - std::log1p(e);
  }
  n.w = 2.0 * kHalfPi * std::cosh(tau) * n.x * n.cx;
  return n;
}

namespace {

template <class NodeSum>
Quad1D refine(NodeSum&& sum_at, double tau_max, double abs_tol, double rel_tol, int max_level) {
  // Level 0 uses step 1 over all integer τ; level ℓ adds the odd multiples of 2^−ℓ.
  Quad1D r;
  double h = 1.0;
  const int k0 = static_cast<int>(std::floor(tau_max));
  Complex acc = 0.0;
  for (int k = -k0; k <= k0; ++k) acc += sum_at(static_cast<double>(k), r.evaluations);
  Complex prev = acc * h;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    const int kmax = static_cast<int>(std::floor(tau_max / h));
    Complex add = 0.0;
    for (int k = -kmax + ((kmax % 2 == 0) ? 1 : 0); k <= kmax; k += 2) {
      if (k % 2 == 0) continue;
      add += sum_at(k * h, r.evaluations);
    }
    acc += add;
    const Complex cur = acc * h;
    r.error = std::abs(cur - prev);
    r.value = cur;
    r.level = level;
    if (level >= 3 && r.error <= std::max(abs_tol, rel_tol * std::abs(cur))) return r;
    prev = cur;
  }
  return r;
}

}  // namespace

Quad1D exp_sinh(const std::function<Complex(double)>& f, double scale, double abs_tol, double rel_tol, int max_level) {
  if (!(scale > 0.0)) throw DomainError("exp_sinh scale must be positive");
  auto at = [&](double tau, long long& evals) -> Complex {
    const ExpSinhNode n = exp_sinh_node(tau);
    if (n.s > 800.0) return 0.0;
    ++evals;
    const Complex v = f(scale * n.s);
    return v * (scale * n.w);
  };
  return refine(at, kExpSinhTauMax, abs_tol, rel_tol, max_level);
}

Quad1D tanh_sinh(const std::function<Complex(double)>& f, double a, double b, double abs_tol, double rel_tol,
                 int max_level) {
  if (!(b > a)) throw DomainError("tanh_sinh requires a < b");
  const double len = b - a;
  auto at = [&](double tau, long long& evals) -> Complex {
    const TanhSinhNode n = tanh_sinh_node(tau);
    const double x = n.x <= 0.5 ? a + len * n.x : b - len * n.cx;
    if (x <= a || x >= b) return 0.0;
    ++evals;
    return f(x) * (len * n.w);
  };
  return refine(at, kTanhSinhTauMax, abs_tol, rel_tol, max_level);
}

}  // namespace squarint
