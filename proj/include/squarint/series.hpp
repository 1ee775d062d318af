#pragma once

#include <functional>
#include <string>

#include "squarint/expr_core.hpp"

namespace squarint {

struct SeriesOptions {
  double tolerance = 1e-12;
  long long max_terms = 1'000'000;
};

struct SeriesEval {
  Complex value{};
  long long terms_used = 0;
  double error_estimate = 0.0;
  std::string method;
};

/// Σ_{n≥start} z^n f(n) for |z| ≤ 1.
///  |z| < 1:  direct, stopped by the geometric remainder bound
///  z = −1:   Cohen–Villegas–Zagier
///  z = 1:    Richardson extrapolation of partial sums at N = 16·2^i
///            (assumes an asymptotic expansion in 1/N)
///  else:     direct to N, tail Σ_j z^j Δ^j f(N)/(1−z)^{j+1}
/// Throws Nonconvergent when the estimate stays above tolerance.
SeriesEval weighted_sum(Complex z, const std::function<Complex(long long)>& f, long long start,
                        const SeriesOptions& opt);

/// Σ_{n≥1} (±1)^n ψ(n/q) / (n·(second ? n + shift : 1)) by direct summation
/// to N = 10⁵ plus an Euler–Maclaurin (ordinary) or Boole (alternating) tail.
SeriesEval psi_sum(double q, bool alternating, bool second, double shift, long long N = 100'000);

/// lim_k ∫₀^∞ dx / ∏_{n<k}(1 + x²/(a+n)²), Richardson over k = kmin·2^i ≤ kmax.
SeriesEval product_limit(double a, int kmin, int kmax);

SeriesEval evaluate_series(const SeriesSpec& spec, const SeriesOptions& opt = {});

}  // namespace squarint
