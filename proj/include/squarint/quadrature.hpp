#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace squarint {

using Complex = std::complex<double>;

/// n-point Gauss–Legendre rule mapped to [0,1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};
GaussRule gauss_legendre(int n);

struct Quad1D {
  Complex value{};
  double error = 0.0;
  long long evaluations = 0;
  int level = 0;
};

/// ∫₀^∞ f(s) ds by the exp-sinh rule s = scale·exp(π/2·sinh τ), τ ∈ [−6, 6].
/// Nodes with s/scale > 800 are dropped, so f must decay at least like
/// e^{−s/scale}. Halves the step until two levels agree within
/// max(abs_tol, rel_tol·|I|).
Quad1D exp_sinh(const std::function<Complex(double)>& f, double scale, double abs_tol, double rel_tol,
                int max_level = 9);

/// ∫_a^b f(x) dx by tanh-sinh; nodes never coincide with the endpoints.
Quad1D tanh_sinh(const std::function<Complex(double)>& f, double a, double b, double abs_tol, double rel_tol,
                 int max_level = 9);

/// Exp-sinh node and weight at τ for unit scale.
struct ExpSinhNode {
  double s;
  double w;  // ds/dτ
};
inline constexpr double kExpSinhTauMax = 6.0;
ExpSinhNode exp_sinh_node(double tau);

/// Tanh-sinh node on [0,1] at τ, carrying both x and 1 − x without
/// cancellation, and log x accurate near both ends.
struct TanhSinhNode {
  double x;
  double cx;    // 1 − x
  double logx;  // log x
  double w;     // dx/dτ
};
inline constexpr double kTanhSinhTauMax = 5.0;
TanhSinhNode tanh_sinh_node(double tau);

}  // namespace squarint
