#include "squarint/special.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "squarint/errors.hpp"

namespace squarint {

namespace {

// B_2, B_4, ..., B_20
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,         -1.0 / 30.0,   1.0 / 42.0,        -1.0 / 30.0,     5.0 / 66.0,
    -691.0 / 2730.0,   7.0 / 6.0,     -3617.0 / 510.0,   43867.0 / 798.0, -174611.0 / 330.0,
};

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kHalfLog2Pi = 0.5 * std::log(2.0 * constants::pi);

void require_positive_real_part(Complex z, const char* what) {
  if (!(z.real() > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + " requires Re z > 0");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Γ family

Complex log_gamma(Complex z) {
  require_positive_real_part(z, "log_gamma");
  Complex shift = 0.0;
  while (z.real() < 10.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex p = inv;
  for (int k = 1; k <= 8; ++k) {
    series += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series - shift;
}

double log_gamma(double x) { return log_gamma(Complex(x, 0.0)).real(); }

Complex digamma(Complex s) {
  require_positive_real_part(s, "digamma");
  Complex acc = 0.0;
  while (s.real() < 10.0) {
    acc -= 1.0 / s;
    s += 1.0;
  }
  const Complex inv2 = 1.0 / (s * s);
  Complex p = inv2;
  Complex series = 0.0;
  for (int k = 1; k <= 8; ++k) {
    series += kBernoulli[k - 1] / (2.0 * k) * p;
    p *= inv2;
  }
  return acc + std::log(s) - 0.5 / s - series;
}

double digamma(double s) { return digamma(Complex(s, 0.0)).real(); }

double trigamma(double s) {
  if (!(s > 0.0)) throw DomainError("trigamma requires s > 0");
  double acc = 0.0;
  while (s < 10.0) {
    acc += 1.0 / (s * s);
    s += 1.0;
  }
  const double inv = 1.0 / s;
  const double inv2 = inv * inv;
  double p = inv2 * inv;
  double series = 0.0;
  for (int k = 1; k <= 8; ++k) {
    series += kBernoulli[k - 1] * p;
    p *= inv2;
  }
  return acc + inv + 0.5 * inv2 + series;
}

// ---------------------------------------------------------------------------
// Alternating acceleration

Complex alternating_sum(const std::function<Complex(long long)>& a, int n) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  Complex s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b = (static_cast<double>(k) + n) * (static_cast<double>(k) - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

namespace {

constexpr int kCvzTerms = 36;

double cvz_bound(double a0) { return 2.0 * std::abs(a0) * std::pow(3.0 + std::sqrt(8.0), -kCvzTerms) + 4 * kEps * std::abs(a0); }

SeriesResult hurwitz_em(double s, double a) {
  constexpr int N = 20;
  double head = 0.0;
  for (int k = N - 1; k >= 0; --k) head += std::pow(k + a, -s);
  const double x = N + a;
  double tail = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  // Σ_j B_2j/(2j)! · s(s+1)…(s+2j−2) · x^{−s−2j+1}
  double rising = s;  // s(s+1)…(s+2j−2) for j = 1
  double fact = 2.0;  // (2j)!
  double xp = std::pow(x, -s - 1.0);
  double last = 0.0;
  for (int j = 1; j <= 9; ++j) {
    last = kBernoulli[j - 1] / fact * rising * xp;
    tail += last;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2.0 * j + 1) * (2.0 * j + 2);
    xp /= x * x;
  }
  return {head + tail, N + 9, std::abs(last) + 8 * kEps * (head + tail), true};
}

}  // namespace

SeriesResult lerch_phi_series(Complex z, double s, double a, double tol) {
  if (!(a > 0.0)) throw DomainError("lerch_phi requires a > 0");
  const double az = std::abs(z);
  if (az > 1.0 + 1e-15) throw DomainError("lerch_phi requires |z| <= 1");
  if (z == Complex(0.0, 0.0)) return {std::pow(a, -s), 1, 0.0, false};

  if (z == Complex(1.0, 0.0)) {
    if (!(s - 1.0 >= 1e-6)) throw DomainError("lerch_phi at z = 1 requires s > 1");
    return hurwitz_em(s, a);
  }
  if (!(s > 0.0)) throw DomainError("lerch_phi requires s > 0 on the unit circle");

  if (z == Complex(-1.0, 0.0)) {
    const Complex v = alternating_sum([&](long long k) { return Complex(std::pow(k + a, -s), 0.0); }, kCvzTerms);
    return {v, kCvzTerms, cvz_bound(std::pow(a, -s)), true};
  }

  if (az < 1.0) {
    Complex sum = 0.0;
    Complex zk = 1.0;
    constexpr long long kMax = 100000000;
    for (long long k = 0; k < kMax; ++k) {
      const double fk = std::pow(k + a, -s);
      sum += zk * fk;
      zk *= z;
      const double bound = std::abs(zk) * std::pow(k + 1 + a, -s) / (1.0 - az);
      if (bound <= tol * std::max(std::abs(sum), 1e-300)) return {sum, k + 1, bound, false};
    }
    throw Nonconvergent("lerch_phi: geometric tail did not reach tolerance");
  }

  // |z| = 1, z ≠ ±1: Σ_{k<N} directly, then
  // Σ_{k≥0} z^k f(N+k) = Σ_j z^j Δ^j f(N) / (1−z)^{j+1}.
  constexpr int N = 2000;
  constexpr int J = 14;
  Complex head = 0.0;
  Complex zk = 1.0;
  for (int k = 0; k < N; ++k) {
    head += zk * std::pow(k + a, -s);
    zk *= z;
  }
  std::array<double, J + 1> diff{};
  for (int i = 0; i <= J; ++i) diff[static_cast<std::size_t>(i)] = std::pow(N + i + a, -s);
  const Complex q = 1.0 / (1.0 - z);
  Complex tail = 0.0;
  Complex factor = q;
  double last = 0.0;
  for (int j = 0; j <= J; ++j) {
    const Complex term = factor * diff[0];
    tail += term;
    last = std::abs(term);
    if (last <= 0.01 * tol * std::abs(head)) break;
    for (int i = 0; i < J - j; ++i) diff[static_cast<std::size_t>(i)] = diff[static_cast<std::size_t>(i) + 1] - diff[static_cast<std::size_t>(i)];
    factor *= z * q;
  }
  return {head + zk * tail, N + J, last + 16 * kEps * std::abs(head), true};
}

Complex lerch_phi(Complex z, double s, double a) { return lerch_phi_series(z, s, a).value; }

double zeta(double s) {
  if (!(s > 1.0)) throw DomainError("zeta requires s > 1");
  return lerch_phi(1.0, s, 1.0).real();
}

// ---------------------------------------------------------------------------
// Euler's constant

namespace {

double gamma_term(double n) {
  const double u = 1.0 / (n + 1.0);
  return u - std::log1p(u);
}

}  // namespace

SeriesResult euler_gamma_partial(long long terms) {
  if (terms < 1) throw DomainError("euler_gamma_partial needs at least one term");
  double sum = 0.0;
  for (long long n = terms - 1; n >= 0; --n) sum += gamma_term(static_cast<double>(n));
  return {sum, terms, 0.5 / static_cast<double>(terms), false};
}

SeriesResult euler_gamma(double tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("euler_gamma tolerance must be positive");
  // Next Euler–Maclaurin term after f‴ is ≈ 360/N⁷ / 30240.
  const double bound_coeff = 360.0 / 30240.0;
  long long N = static_cast<long long>(std::ceil(std::pow(bound_coeff / tolerance, 1.0 / 7.0))) + 2;
  N = std::max<long long>(N, 4);
  double head = 0.0;
  for (long long n = N - 1; n >= 0; --n) head += gamma_term(static_cast<double>(n));
  const double x = static_cast<double>(N);
  const double integral = (x + 2.0) * std::log1p(1.0 / (x + 1.0)) - 1.0;
  const double f1 = -1.0 / ((x + 1.0) * (x + 1.0) * (x + 2.0));
  const double f3 = -6.0 / std::pow(x + 1.0, 4) - 2.0 / std::pow(x + 2.0, 3) + 2.0 / std::pow(x + 1.0, 3);
  const double tail = integral + 0.5 * gamma_term(x) - f1 / 12.0 + f3 / 720.0;
  const double bound = bound_coeff / std::pow(x, 7) + 8 * kEps;
  if (bound > tolerance && tolerance < 8 * kEps) throw Nonconvergent("euler_gamma: tolerance below rounding floor");
  return {head + tail, N, bound, true};
}

// ---------------------------------------------------------------------------
// Exponential integrals

double exp_integral_E(int n, double x) {
  if (n < 0) throw DomainError("exp_integral_E requires n >= 0");
  if (!(x > 0.0)) throw DomainError("exp_integral_E requires x > 0");
  if (n == 0) return std::exp(-x) / x;
  const int nm1 = n - 1;
  constexpr int kMaxIter = 10000;
  if (x > 1.0) {
    // Modified Lentz on the continued fraction for e^x E_n(x).
    constexpr double tiny = 1e-300;
    double b = x + n;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
      const double an = -static_cast<double>(i) * (nm1 + i);
      b += 2.0;
      d = 1.0 / (an * d + b);
      c = b + an / c;
      const double del = c * d;
      h *= del;
      if (std::abs(del - 1.0) < kEps) return h * std::exp(-x);
    }
    throw Nonconvergent("exp_integral_E: continued fraction failed");
  }
  double ans = nm1 != 0 ? 1.0 / nm1 : -std::log(x) - constants::euler_gamma;
  double fact = 1.0;
  for (int i = 1; i <= kMaxIter; ++i) {
    fact *= -x / i;
    double del;
    if (i != nm1) {
      del = -fact / (i - nm1);
    } else {
      double psi = -constants::euler_gamma;
      for (int ii = 1; ii <= nm1; ++ii) psi += 1.0 / ii;
      del = fact * (-std::log(x) + psi);
    }
    ans += del;
    if (std::abs(del) < std::abs(ans) * kEps) return ans;
  }
  throw Nonconvergent("exp_integral_E: series failed");
}

namespace {

Complex e1_series(Complex w) {
  Complex sum = 0.0;
  Complex term = 1.0;
  for (int k = 1; k < 400; ++k) {
    term *= -w / static_cast<double>(k);
    const Complex add = term / static_cast<double>(k);
    sum += add;
    if (std::abs(add) < kEps * std::abs(sum)) break;
  }
  return -constants::euler_gamma - std::log(w) - sum;
}

Complex e1_scaled_cf(Complex w) {
  constexpr double tiny = 1e-300;
  Complex b = w + 1.0;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i <= 20000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const Complex del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw Nonconvergent("expint_e1: continued fraction failed near the branch cut");
}

// e^w E_1(w) ~ (1/w) Σ (−1)^k k!/w^k, stopped at the smallest term; only
// used for |w| > 40, where that term is below 1e−17.
Complex e1_scaled_asymptotic(Complex w) {
  Complex sum = 1.0, term = 1.0;
  for (int k = 1; k < 60; ++k) {
    const Complex next = term * (-static_cast<double>(k)) / w;
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) break;
  }
  return sum / w;
}

// The continued fraction converges slowly close to the negative real axis.
bool near_negative_axis(Complex w) { return w.real() < 0.0 && std::abs(w.imag()) < 0.5 * -w.real(); }

// Principal-branch jump: the asymptotic series is continuous across the
// cut, E_1 itself jumps by 2πi there.
Complex branch_term(Complex w) { return Complex(0.0, w.imag() < 0.0 ? constants::pi : -constants::pi); }

}  // namespace

Complex expint_e1(Complex w) {
  if (w == Complex(0.0, 0.0)) throw DomainError("expint_e1 is singular at 0");
  if (std::abs(w) <= 4.0) return e1_series(w);
  if (near_negative_axis(w)) {
    if (std::abs(w) <= 40.0) return e1_series(w);
    return std::exp(-w) * e1_scaled_asymptotic(w) + branch_term(w);
  }
  return std::exp(-w) * e1_scaled_cf(w);
}

Complex expint_e1_scaled(Complex w) {
  if (w == Complex(0.0, 0.0)) throw DomainError("expint_e1 is singular at 0");
  if (std::abs(w) <= 4.0) return std::exp(w) * e1_series(w);
  if (near_negative_axis(w)) {
    if (std::abs(w) <= 40.0) return std::exp(w) * e1_series(w);
    return e1_scaled_asymptotic(w) + std::exp(w) * branch_term(w);
  }
  return e1_scaled_cf(w);
}

// ---------------------------------------------------------------------------

SeriesResult alt_log_product(double a, double b, double c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) throw DomainError("alt_log_product requires positive parameters");
  const double diff = b - c;
  auto term = [&](long long n) { return Complex(std::log1p(diff / (a * static_cast<double>(n) + c)), 0.0); };
  const Complex v = alternating_sum(term, kCvzTerms);
  return {v, kCvzTerms, cvz_bound(term(0).real()), true};
}

}  // namespace squarint
