#include "squarint/cubature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "squarint/errors.hpp"
#include "squarint/halfline.hpp"
#include "squarint/quadrature.hpp"
#include "squarint/series.hpp"
#include "squarint/sobol.hpp"

namespace squarint {

namespace {

constexpr int kMaxDeterministicDim = 6;
constexpr int kMaxDim = 12;

std::string fmt_e(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// e^z − 1 without cancellation for small |z|.
Complex cexpm1(Complex z) {
  const double a = z.real();
  const double b = z.imag();
  const double sb = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * sb * sb, std::exp(a) * std::sin(b)};
}

Complex select(Complex v, Part p) {
  switch (p) {
    case Part::Real: return {v.real(), 0.0};
    case Part::Imag: return {v.imag(), 0.0};
    case Part::Value: return v;
  }
  return v;
}

double target(const CubatureOptions& o, Complex I) { return std::max(o.tolerance, o.tolerance * std::abs(I)); }

std::vector<LogMonomial> monomials_of(const OrthantTerm& t, int k) {
  if (!t.poly.empty()) return t.poly;
  return {LogMonomial{1.0, std::vector<int>(static_cast<std::size_t>(k), 0)}};
}

// Weights used by the radial substitution: with j = 0 the denominator is
// absent and any positive weights will do.
std::vector<double> radial_weights(const OrthantForm& f) {
  std::vector<double> w = f.weights;
  if (f.power == 0) {
    for (double& x : w) {
      if (x <= 0.0) x = 1.0;
    }
  }
  return w;
}

bool all_positive(const std::vector<double>& w) {
  return std::all_of(w.begin(), w.end(), [](double x) { return x > 0.0; });
}

// ---------------------------------------------------------------------------
// Integrand in t (exponents β) or in x (exponents μ = β − 1), shared.

Complex core_value(const OrthantForm& f, std::span<const double> t, bool cube_exponents) {
  const auto k = static_cast<std::size_t>(f.dim);
  double wt = 0.0;
  for (std::size_t n = 0; n < k; ++n) wt += f.weights[n] * t[n];

  std::vector<Complex> expo(f.terms.size());
  double amax = 0.0;
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    Complex a = 0.0;
    for (std::size_t n = 0; n < k; ++n) {
      const Complex b = cube_exponents ? f.terms[i].beta[n] - 1.0 : f.terms[i].beta[n];
      a += b * t[n];
    }
    expo[i] = a;
    amax = std::max(amax, std::abs(a));
  }
  const bool small = amax <= 1.0;
  Complex A = 0.0;
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    const auto& term = f.terms[i];
    const Complex e = small ? Complex(0.0) : std::exp(-expo[i]);
    const Complex em = small ? cexpm1(-expo[i]) : Complex(0.0);
    for (const auto& mono : monomials_of(term, f.dim)) {
      double p = mono.coeff * term.coeff;
      int deg = 0;
      for (std::size_t n = 0; n < k; ++n) {
        if (mono.powers[n] != 0) p *= std::pow(-t[n], mono.powers[n]);
        deg += mono.powers[n];
      }
      if (small && deg == 0) {
        A += p + p * em;
      } else {
        A += p * (small ? std::exp(-expo[i]) : e);
      }
    }
  }
  Complex G = 1.0;
  if (f.geometric) {
    double et = 0.0;
    for (std::size_t n = 0; n < k; ++n) et += f.geometric->exps[n] * t[n];
    if (f.geometric->z == Complex(1.0, 0.0)) {
      G = 1.0 / -std::expm1(-et);
    } else {
      G = 1.0 / (1.0 - f.geometric->z * std::exp(-et));
    }
  }
  const double den = f.power == 0 ? 1.0 : std::pow(f.shift + wt, f.power);
  return A * G / den;
}

// ---------------------------------------------------------------------------
// Radial substitution tₙ = s·vₙ/wₙ along one simplex direction v.

struct Sub {
  Complex coeff;
  Complex lambda;
  int deg;
};

struct Ray {
  std::vector<Sub> flat;     // no s-power
  Complex flat_sum{};
  std::vector<Sub> powered;  // s^deg e^{−sΛ}
  double lambda_min = INFINITY;
  double lambda_abs = 0.0;
  double E = 0.0;
  const OrthantForm* form = nullptr;
  double jac = 1.0;
};

Ray make_ray(const OrthantForm& f, const std::vector<double>& w, const double* v, double jac) {
  Ray r;
  r.form = &f;
  r.jac = jac;
  const auto k = static_cast<std::size_t>(f.dim);
  for (const auto& term : f.terms) {
    Complex L = 0.0;
    for (std::size_t n = 0; n < k; ++n) L += term.beta[n] * (v[n] / w[n]);
    r.lambda_min = std::min(r.lambda_min, L.real());
    r.lambda_abs = std::max(r.lambda_abs, std::abs(L));
    for (const auto& mono : monomials_of(term, f.dim)) {
      double a = mono.coeff * term.coeff;
      int deg = 0;
      for (std::size_t n = 0; n < k; ++n) {
        if (mono.powers[n] != 0) a *= std::pow(-v[n] / w[n], mono.powers[n]);
        deg += mono.powers[n];
      }
      if (deg == 0) {
        r.flat.push_back({a, L, 0});
        r.flat_sum += a;
      } else {
        r.powered.push_back({a, L, deg});
      }
    }
  }
  if (f.geometric) {
    for (std::size_t n = 0; n < k; ++n) r.E += f.geometric->exps[n] * v[n] / w[n];
  }
  return r;
}

Complex ray_value(const Ray& r, double s) {
  const OrthantForm& f = *r.form;
  Complex A = 0.0;
  if (s * r.lambda_abs <= 1.0) {
    A = r.flat_sum;
    for (const auto& sub : r.flat) A += sub.coeff * cexpm1(-s * sub.lambda);
  } else {
    for (const auto& sub : r.flat) A += sub.coeff * std::exp(-s * sub.lambda);
  }
  for (const auto& sub : r.powered) A += sub.coeff * std::pow(s, sub.deg) * std::exp(-s * sub.lambda);
  if (A == Complex(0.0, 0.0)) return 0.0;
  const int k = f.dim;
  const double radial = f.shift == 0.0 ? std::pow(s, k - 1 - f.power) : std::pow(s, k - 1) / std::pow(f.shift + s, f.power);
  Complex G = 1.0;
  if (f.geometric) {
    const double se = s * r.E;
    G = f.geometric->z == Complex(1.0, 0.0) ? Complex(1.0 / -std::expm1(-se))
                                             : 1.0 / (1.0 - f.geometric->z * std::exp(-se));
  }
  return A * G * (radial * r.jac);
}

// Stick-breaking map from the unit cube to the simplex; returns the Jacobian.
double duffy(const double* u, int k, double* v) {
  double rest = 1.0;
  double jac = 1.0;
  for (int i = 0; i < k - 1; ++i) {
    v[i] = rest * u[i];
    jac *= std::pow(1.0 - u[i], k - 2 - i);
    rest *= 1.0 - u[i];
  }
  v[k - 1] = rest;
  return jac;
}

bool simplex_constant(const OrthantForm& f, const std::vector<double>& w) {
  const auto k = static_cast<std::size_t>(f.dim);
  auto same = [](Complex a, Complex b) { return std::abs(a - b) <= 1e-14 * std::max(1.0, std::abs(a)); };
  for (const auto& term : f.terms) {
    for (const auto& mono : term.poly) {
      for (int p : mono.powers) {
        if (p != 0) return false;
      }
    }
    for (std::size_t n = 1; n < k; ++n) {
      if (!same(term.beta[n] / w[n], term.beta[0] / w[0])) return false;
    }
  }
  if (f.geometric) {
    for (std::size_t n = 1; n < k; ++n) {
      if (!same(f.geometric->exps[n] / w[n], f.geometric->exps[0] / w[0])) return false;
    }
  }
  return true;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

OrthantForm to_orthant(const CubePlan& plan) {
  if (plan.terms.empty()) throw DomainError("cube plan without terms");
  const auto& first = plan.terms.front().spec;
  OrthantForm f;
  f.dim = first.dim;
  f.weights = first.log_weights;
  f.power = first.log_power;
  f.shift = first.log_shift;
  f.geometric = first.geometric;
  for (const auto& t : plan.terms) {
    OrthantTerm o;
    o.coeff = t.coeff;
    for (Complex mu : t.spec.exponents) o.beta.push_back(mu + 1.0);
    o.poly = t.spec.poly_log;
    f.terms.push_back(std::move(o));
  }
  return f;
}

OrthantForm to_orthant(const CubeIntegrandSpec& spec) { return to_orthant(CubePlan{{CubeTerm{1.0, spec}}}); }

Complex evaluate_orthant(const OrthantForm& form, std::span<const double> t) { return core_value(form, t, false); }

Complex evaluate_cube(const CubeIntegrandSpec& spec, std::span<const double> x) {
  Complex mono = 1.0;
  double logsum = 0.0;
  std::vector<double> lx(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    lx[n] = std::log(x[n]);
    mono *= std::exp(spec.exponents[n] * lx[n]);
    logsum += spec.log_weights[n] * lx[n];
  }
  double L = spec.poly_log.empty() ? 1.0 : 0.0;
  for (const auto& m : spec.poly_log) {
    double p = m.coeff;
    for (std::size_t n = 0; n < x.size(); ++n) p *= std::pow(lx[n], m.powers[n]);
    L += p;
  }
  Complex G = 1.0;
  if (spec.geometric) {
    double prod = 1.0;
    for (std::size_t n = 0; n < x.size(); ++n) prod *= std::pow(x[n], spec.geometric->exps[n]);
    G = 1.0 / (1.0 - spec.geometric->z * prod);
  }
  return mono * L * G / std::pow(spec.log_shift - logsum, spec.log_power);
}

// ---------------------------------------------------------------------------

QuadratureResult integrate_radial_simplex(const OrthantForm& form, Part part, const CubatureOptions& opt) {
  const int k = form.dim;
  if (k < 1 || k > kMaxDeterministicDim) {
    throw InvalidDim("radial-simplex supports 1 <= k <= " + std::to_string(kMaxDeterministicDim) + ", got " + std::to_string(k));
  }
  const std::vector<double> w = radial_weights(form);
  if (!all_positive(w)) throw DomainError("radial-simplex requires positive log weights");
  double jac = 1.0;
  for (double x : w) jac /= x;
  const double inner_tol = 1e-2 * opt.tolerance;
  const std::string label = k == 1 ? "tanh-sinh-1d" : "radial-simplex";

  auto inner = [&](const double* v, double outer_w) -> PointEval {
    const Ray ray = make_ray(form, w, v, jac);
    if (!(ray.lambda_min > 0.0)) throw DomainError("radial-simplex: non-positive decay rate on the simplex");
    const Quad1D q = exp_sinh([&](double s) { return select(ray_value(ray, s), part); }, 1.0 / ray.lambda_min,
                              inner_tol * 1e-3, inner_tol);
    return {q.value * outer_w, q.evaluations, q.error * std::abs(outer_w)};
  };

  if (k == 1 || simplex_constant(form, w)) {
    std::vector<double> v(static_cast<std::size_t>(k), 1.0 / k);
    const PointEval p = inner(v.data(), 1.0 / factorial(k - 1));
    if (p.error > target(opt, p.value)) {
      throw Nonconvergent(label + ": inner integral stalled at error " + fmt_e(p.error));
    }
    return {p.value, p.error, p.evaluations, label};
  }

  long long evals = 0;
  double per_point = 100.0;
  Complex prev = 0.0;
  bool have_prev = false;
  double last_change = INFINITY;
  for (int order : {4, 7, 10, 14, 19, 26, 34, 45, 60}) {
    long long npts = 1;
    for (int d = 0; d < k - 1; ++d) npts *= order;
    if (evals + static_cast<long long>(per_point * static_cast<double>(npts)) > opt.max_evaluations) break;
    const GaussRule g = gauss_legendre(order);
    const PointSum sum = sum_points(
        npts,
        [&](long long idx) {
          double u[kMaxDeterministicDim];
          double v[kMaxDeterministicDim];
          double wt = 1.0;
          long long r = idx;
          for (int d = 0; d < k - 1; ++d) {
            const auto i = static_cast<std::size_t>(r % order);
            r /= order;
            u[d] = g.x[i];
            wt *= g.w[i];
          }
          const double dj = duffy(u, k, v);
          return inner(v, wt * dj);
        },
        opt.exec);
    evals += sum.evaluations;
    per_point = static_cast<double>(sum.evaluations) / static_cast<double>(npts);
    if (have_prev) {
      last_change = std::abs(sum.value - prev);
      const double est = last_change + sum.error;
      if (est <= target(opt, sum.value)) return {sum.value, est, evals, label};
    }
    prev = sum.value;
    have_prev = true;
  }
  throw Nonconvergent(label + ": evaluation budget " + std::to_string(opt.max_evaluations) +
                      " exhausted (last change " + fmt_e(last_change) + ")");
}

QuadratureResult integrate_cube_tensor(const CubePlan& plan, Part part, const CubatureOptions& opt) {
  const OrthantForm form = to_orthant(plan);
  const int k = form.dim;
  if (k < 1 || k > 4) throw InvalidDim("cube-tensor supports 1 <= k <= 4, got " + std::to_string(k));
  long long evals = 0;
  Complex prev = 0.0;
  double last_change = INFINITY;
  for (int level = 0; level <= 12; ++level) {
    const double h = std::ldexp(1.0, -level);
    const int half = static_cast<int>(std::floor(kTanhSinhTauMax / h));
    const int M = 2 * half + 1;
    long long npts = 1;
    for (int d = 0; d < k; ++d) npts *= M;
    if (evals + npts > opt.max_evaluations) break;
    std::vector<TanhSinhNode> nodes(static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) nodes[static_cast<std::size_t>(i)] = tanh_sinh_node((i - half) * h);
    const PointSum sum = sum_points(
        npts,
        [&](long long idx) -> PointEval {
          double t[4];
          double wt = 1.0;
          long long r = idx;
          for (int d = 0; d < k; ++d) {
            const auto& nd = nodes[static_cast<std::size_t>(r % M)];
            r /= M;
            t[d] = -nd.logx;
            wt *= nd.w;
          }
          if (wt == 0.0) return {0.0, 1, 0.0};
          const Complex v = select(core_value(form, std::span<const double>(t, static_cast<std::size_t>(k)), true), part);
          return {v * wt, 1, 0.0};
        },
        opt.exec);
    evals += sum.evaluations;
    const Complex I = sum.value * std::pow(h, k);
    if (level >= 2) {
      last_change = std::abs(I - prev);
      if (last_change <= target(opt, I)) return {I, last_change, evals, "cube-tensor"};
    }
    prev = I;
  }
  throw Nonconvergent("cube-tensor: evaluation budget " + std::to_string(opt.max_evaluations) +
                      " exhausted (last change " + fmt_e(last_change) + ")");
}

QuadratureResult integrate_low_discrepancy(const OrthantForm& form, Part part, const CubatureOptions& opt) {
  const int k = form.dim;
  if (k < 1 || k > kMaxDim) throw InvalidDim("low-discrepancy supports 1 <= k <= 12, got " + std::to_string(k));
  if (opt.qmc_shifts < 2) throw DomainError("low-discrepancy needs at least two shifts");
  const long long N = opt.qmc_points;
  const std::vector<double> w = radial_weights(form);
  const bool radial = all_positive(w);
  double jac = 1.0;
  for (double x : w) jac /= x;
  std::vector<double> lam(static_cast<std::size_t>(k), INFINITY);
  for (const auto& term : form.terms) {
    for (std::size_t n = 0; n < lam.size(); ++n) lam[n] = std::min(lam[n], term.beta[n].real());
  }

  const SobolSequence sob(k);
  std::mt19937_64 rng(opt.seed);
  std::vector<Complex> Q;
  long long evals = 0;
  for (int r = 0; r < opt.qmc_shifts; ++r) {
    std::vector<std::uint32_t> shift(static_cast<std::size_t>(k));
    for (auto& s : shift) s = static_cast<std::uint32_t>(rng() >> 32);
    const PointSum sum = sum_points(
        N,
        [&](long long i) -> PointEval {
          double u[kMaxDim];
          sob.shifted_point(static_cast<std::uint64_t>(i), shift, std::span<double>(u, static_cast<std::size_t>(k)));
          if (radial) {
            double v[kMaxDim];
            const double dj = k == 1 ? 1.0 : duffy(u + 1, k, v);
            if (k == 1) v[0] = 1.0;
            const Ray ray = make_ray(form, w, v, jac);
            const double l = ray.lambda_min;
            const double s = -std::log1p(-u[0]) / l;
            const double wt = dj / (l * (1.0 - u[0]));
            return {select(ray_value(ray, s), part) * wt, 1, 0.0};
          }
          double t[kMaxDim];
          double wt = 1.0;
          for (int n = 0; n < k; ++n) {
            const double l = lam[static_cast<std::size_t>(n)];
            t[n] = -std::log1p(-u[n]) / l;
            wt /= l * (1.0 - u[n]);
          }
          return {select(core_value(form, std::span<const double>(t, static_cast<std::size_t>(k)), false), part) * wt, 1, 0.0};
        },
        opt.exec);
    evals += sum.evaluations;
    Q.push_back(sum.value / static_cast<double>(N));
  }
  Complex mean = 0.0;
  for (auto q : Q) mean += q;
  mean /= static_cast<double>(Q.size());
  double var = 0.0;
  for (auto q : Q) var += std::norm(q - mean);
  const double R = static_cast<double>(Q.size());
  const double se = std::sqrt(var / (R * (R - 1.0)));
  return {mean, se, evals, "low-discrepancy"};
}

Complex log_moment_kernel(Complex alpha, int p, int q) {
  if (!(alpha.real() > 0.0)) throw DomainError("log_moment_kernel requires Re alpha > 0");
  if (p < 0 || q < 0) throw DomainError("log_moment_kernel requires p, q >= 0");
  const double sign = ((p + q) % 2 == 0) ? 1.0 : -1.0;
  return sign * factorial(p) * factorial(q) / ((p + q + 1.0) * std::pow(alpha, p + q + 1));
}

QuadratureResult integrate_series_mode(const OrthantForm& form, Part part, const CubatureOptions& opt) {
  const int k = form.dim;
  const auto K = static_cast<std::size_t>(k);
  const int j = form.power;
  const double m = form.shift;
  const std::vector<double> e = form.geometric ? form.geometric->exps : std::vector<double>(K, 0.0);

  bool kernel = k == 2 && j == 1 && m == 0.0 && form.weights[0] == 1.0 && form.weights[1] == 1.0 && e[0] == e[1];
  for (const auto& t : form.terms) kernel = kernel && t.beta[0] == t.beta[1];

  auto value_at = [&](long long idx) -> Complex {
    const double n = static_cast<double>(idx);
    if (kernel) {
      Complex s = 0.0;
      for (const auto& t : form.terms) {
        for (const auto& mono : monomials_of(t, k)) {
          s += t.coeff * mono.coeff * log_moment_kernel(t.beta[0] + n * e[0], mono.powers[0], mono.powers[1]);
        }
      }
      return s;
    }
    if (j == 0) {
      Complex s = 0.0;
      for (const auto& t : form.terms) {
        for (const auto& mono : monomials_of(t, k)) {
          Complex p = t.coeff * mono.coeff;
          for (std::size_t d = 0; d < K; ++d) {
            const int pw = mono.powers[d];
            p *= ((pw % 2 == 0) ? 1.0 : -1.0) * factorial(pw) / std::pow(t.beta[d] + n * e[d], pw + 1);
          }
          s += p;
        }
      }
      return s;
    }
    PartialFractionExpansion comb;
    Complex direct = 0.0;
    for (const auto& t : form.terms) {
      for (const auto& mono : monomials_of(t, k)) {
        Complex C = t.coeff * mono.coeff / factorial(j - 1);
        FactorProduct fp;
        fp.numerator.assign(static_cast<std::size_t>(j), 0.0);
        fp.numerator.back() = 1.0;
        for (std::size_t d = 0; d < K; ++d) {
          const int pw = mono.powers[d];
          C *= ((pw % 2 == 0) ? 1.0 : -1.0) * factorial(pw);
          const Complex b = t.beta[d] + n * e[d];
          if (form.weights[d] == 0.0) {
            C /= std::pow(b, pw + 1);
          } else {
            fp.factors.push_back({form.weights[d], b, pw + 1});
          }
        }
        if (m > 0.0) {
          direct += C * integrate_rational_exp(fp, m);
          continue;
        }
        if (fp.denominator_degree() < j) throw Divergent("series mode: term diverges at infinity");
        const PartialFractionExpansion pfe = partial_fractions(fp);
        for (const auto& term : pfe.terms) comb.terms.push_back({term.root, term.order, term.coeff * C});
      }
    }
    if (m > 0.0) return direct;
    return integrate_expansion(comb, 0.0);
  };

  const std::string label = kernel ? "series-kernel" : "series-closed-form";
  if (!form.geometric) {
    const Complex v = select(value_at(0), part);
    return {v, 0.0, 1, label};
  }
  const Complex z = form.geometric->z;
  SeriesOptions so;
  so.tolerance = opt.tolerance;
  so.max_terms = std::max<long long>(opt.max_evaluations, 16);
  SeriesEval r;
  if (z.imag() == 0.0) {
    r = weighted_sum(z, [&](long long i) { return select(value_at(i), part); }, 0, so);
  } else {
    r = weighted_sum(z, value_at, 0, so);
    r.value = select(r.value, part);
  }
  return {r.value, r.error_estimate, r.terms_used, label + "/" + r.method};
}

QuadratureResult integrate_cube(const CubePlan& plan, Part part, const CubatureOptions& opt) {
  {
    Plan wrap;
    wrap.terms.push_back(PlanTerm{1.0, Part::Value, plan});
    if (auto v = validate(wrap); !v.empty()) throw DomainError("invalid cube plan: " + describe(v));
  }
  const OrthantForm form = to_orthant(plan);
  const int k = form.dim;
  if (k > kMaxDim) throw InvalidDim("cube integrals support k <= 12, got " + std::to_string(k));

  if (plan.method == CubeMethod::Series || (plan.method == CubeMethod::Auto && opt.series_mode == SeriesMode::Force)) {
    return integrate_series_mode(form, part, opt);
  }
  switch (plan.method) {
    case CubeMethod::RadialSimplex: return integrate_radial_simplex(form, part, opt);
    case CubeMethod::CubeTensor: return integrate_cube_tensor(plan, part, opt);
    case CubeMethod::LowDiscrepancy: return integrate_low_discrepancy(form, part, opt);
    default: break;
  }
  const bool unit = form.geometric && std::abs(form.geometric->z) >= 1.0 - 1e-15;
  try {
    if (k <= kMaxDeterministicDim && all_positive(radial_weights(form))) return integrate_radial_simplex(form, part, opt);
    return integrate_low_discrepancy(form, part, opt);
  } catch (const Nonconvergent&) {
    if (!unit || opt.series_mode == SeriesMode::Never) throw;
  }
  return integrate_series_mode(form, part, opt);
}

QuadratureResult integrate_cube(const CubeIntegrandSpec& spec, const CubatureOptions& opt) {
  return integrate_cube(CubePlan{{CubeTerm{1.0, spec}}}, Part::Value, opt);
}

// ---------------------------------------------------------------------------

double riemann_limit_sum(const std::function<double(double)>& f, const std::vector<double>& ts, double tol) {
  if (ts.size() < 2) throw DomainError("riemann_limit_sum needs at least two step sizes");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(ts[i] > 0.0) || (i > 0 && !(ts[i] < ts[i - 1]))) {
      throw DomainError("riemann_limit_sum needs a positive decreasing step sequence");
    }
  }
  const double X = ts[0] * std::ceil(50.0 / ts[0]);
  const Quad1D tail = tanh_sinh(
      [&](double u) -> Complex {
        const double x = X / u;
        if (x > 1e150) return 0.0;
        return f(x) * X / (u * u);
      },
      0.0, 1.0, 1e-16, 1e-13);
  // Adding t·(f(0) − f(X))/2, which vanishes in the limit, turns the sum into
  // the trapezoid rule on [0, X], whose error is even in t; Neville in t².
  const double f0 = f(0.0);
  const double fX = f(X);
  std::vector<std::vector<double>> T;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double t = ts[i];
    const auto N = static_cast<long long>(std::llround(X / t));
    double s = 0.0;
    for (long long n = 1; n <= N; ++n) s += f(static_cast<double>(n) * t);
    std::vector<double> row{t * s + 0.5 * t * (f0 - fX) + tail.value.real()};
    for (std::size_t c = 1; c <= i; ++c) {
      const double tj = ts[i - c];
      row.push_back(row[c - 1] + (row[c - 1] - T[i - 1][c - 1]) * (t * t) / (tj * tj - t * t));
    }
    T.push_back(std::move(row));
  }
  const double best = T.back().back();
  const double change = std::abs(best - T[T.size() - 2].back());
  if (change > tol) throw Nonconvergent("riemann_limit_sum: extrapolants differ by " + fmt_e(change));
  return best;
}

}  // namespace squarint
