#pragma once

#include <complex>
#include <functional>

namespace squarint {

using Complex = std::complex<double>;

namespace constants {
// Reference values to 20 significant digits, independent of the series below.
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double e = 2.71828182845904523536;
inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr double log2 = 0.69314718055994530942;
inline constexpr double catalan = 0.91596559417721901505;
}  // namespace constants

struct SeriesResult {
  Complex value{};
  long long terms_used = 1;
  double tail_bound = 0.0;
  bool accelerated = false;
};

/// Principal log Γ for Re z > 0. Recurrence up to Re z ≥ 10, then Stirling
/// with eight Bernoulli terms (truncation below 1e−17 there).
Complex log_gamma(Complex z);
double log_gamma(double x);

/// ψ for Re s > 0: recurrence up to Re s ≥ 10, then the asymptotic series.
Complex digamma(Complex s);
double digamma(double s);

/// ψ′ for s > 0, same scheme. Used for tail derivatives.
double trigamma(double s);

/// Φ(z, s, a) = Σ_{k≥0} z^k/(k+a)^s for |z| ≤ 1, a > 0.
///  z = 1:   Euler–Maclaurin (requires s > 1)
///  z = −1:  Cohen–Villegas–Zagier alternating acceleration
///  |z| < 1: direct sum, geometric tail bound
///  else:    direct sum plus a repeated summation-by-parts tail
SeriesResult lerch_phi_series(Complex z, double s, double a, double tol = 1e-14);
Complex lerch_phi(Complex z, double s, double a);

double zeta(double s);

/// Partial sums of Σ_{n≥0} (1/(n+1) − log((n+2)/(n+1))) with an
/// Euler–Maclaurin tail; the number of terms is chosen from the a priori
/// remainder bound for the requested tolerance.
SeriesResult euler_gamma(double tolerance);
/// The plain partial sum of the first `terms` terms, no tail.
SeriesResult euler_gamma_partial(long long terms);

/// E_n(x) for n ≥ 0, x > 0 (series for x ≤ 1, continued fraction above).
double exp_integral_E(int n, double x);

/// Complex E₁(w), principal branch. |w| ≤ 4 power series, otherwise
/// modified Lentz continued fraction.
Complex expint_e1(Complex w);
/// e^w · E₁(w); stays finite where E₁ under/overflows.
Complex expint_e1_scaled(Complex w);

/// log ∏_{n≥0} ((an+b)/(an+c))^{(−1)^n}, summed with the alternating
/// acceleration on log1p((b−c)/(an+c)).
SeriesResult alt_log_product(double a, double b, double c);

/// Σ_{k≥0} (−1)^k a(k) by Cohen–Villegas–Zagier with n terms. Exact for
/// totally monotone a up to ~2|a(0)|/5.83^n.
Complex alternating_sum(const std::function<Complex(long long)>& a, int n = 36);

}  // namespace squarint
