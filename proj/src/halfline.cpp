#include "squarint/halfline.hpp"

#include <algorithm>
#include <cmath>

#include "squarint/errors.hpp"
#include "squarint/special.hpp"

namespace squarint {

namespace {

struct Root {
  Complex z;
  int mult;
};

struct Canonical {
  std::vector<Root> roots;
  Complex log_scale{0.0, 0.0};
  int degree = 0;
};

bool root_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

Canonical canonical_form(const FactorProduct& fp) {
  Canonical c;
  std::vector<Root> raw;
  for (const auto& f : fp.factors) {
    if (f.slope == 0.0) throw DomainError("zero slope in linear factor");
    if (f.multiplicity < 1) throw DomainError("multiplicity must be >= 1");
    raw.push_back({f.root(), f.multiplicity});
    c.log_scale -= static_cast<double>(f.multiplicity) * std::log(Complex(f.slope, 0.0));
    c.degree += f.multiplicity;
  }
  std::stable_sort(raw.begin(), raw.end(), [](const Root& a, const Root& b) { return root_less(a.z, b.z); });
  std::vector<bool> used(raw.size(), false);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    Root r = raw[i];
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (!used[j] && std::abs(raw[j].z - r.z) <= kRootMergeTolerance) {
        r.mult += raw[j].mult;
        used[j] = true;
      }
    }
    c.roots.push_back(r);
  }
  for (std::size_t i = 0; i < c.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < c.roots.size(); ++j) {
      if (std::abs(c.roots[i].z - c.roots[j].z) < kRootSeparationLimit) {
        throw IllConditioned("distinct roots closer than 1e-9; re-canonicalize with a looser merge");
      }
    }
  }
  return c;
}

std::vector<Complex> to_complex(const std::vector<double>& p) {
  std::vector<Complex> out(p.begin(), p.end());
  while (!out.empty() && out.back() == Complex(0.0, 0.0)) out.pop_back();
  return out;
}

void check_branch(Complex z) {
  if (z.imag() == 0.0 && z.real() >= 0.0) {
    throw BranchConflict("root on the closed positive axis puts -z on the principal-log cut");
  }
}

PartialFractionExpansion pf_core(const Canonical& c, const std::vector<Complex>& numerator) {
  if (static_cast<int>(numerator.size()) > c.degree) {
    throw DomainError("partial fractions need deg P < D (improper numerator)");
  }
  PartialFractionExpansion out;
  out.global_scale = std::exp(c.log_scale);
  for (std::size_t j = 0; j < c.roots.size(); ++j) {
    const Complex z = c.roots[j].z;
    const int M = c.roots[j].mult;

    // Taylor coefficients of P at z by repeated synthetic division.
    std::vector<Complex> q(static_cast<std::size_t>(M), Complex(0.0, 0.0));
    std::vector<Complex> poly = numerator;
    for (int l = 0; l < M && !poly.empty(); ++l) {
      const std::size_t n = poly.size() - 1;
      std::vector<Complex> quot(n);
      Complex b = poly[n];
      for (std::size_t i = n; i-- > 0;) {
        quot[i] = b;
        b = poly[i] + z * b;
      }
      q[static_cast<std::size_t>(l)] = b;
      poly = std::move(quot);
    }

    // ∏_{i≠j} (h + dᵢ)^{−mᵢ} = exp(−Σ mᵢ log dᵢ) · ∏ (1 + h/dᵢ)^{−mᵢ}
    Complex log_pref = c.log_scale;
    std::vector<Complex> series(static_cast<std::size_t>(M), Complex(0.0, 0.0));
    series[0] = 1.0;
    for (std::size_t i = 0; i < c.roots.size(); ++i) {
      if (i == j) continue;
      const Complex d = z - c.roots[i].z;
      const int mi = c.roots[i].mult;
      log_pref -= static_cast<double>(mi) * std::log(d);
      if (M == 1) continue;
      std::vector<Complex> f(static_cast<std::size_t>(M));
      f[0] = 1.0;
      for (int l = 1; l < M; ++l) {
        f[static_cast<std::size_t>(l)] = f[static_cast<std::size_t>(l - 1)] * (-(mi + l - 1.0) / l) / d;
      }
      std::vector<Complex> prod(static_cast<std::size_t>(M), Complex(0.0, 0.0));
      for (int a = 0; a < M; ++a) {
        for (int b = 0; a + b < M; ++b) {
          prod[static_cast<std::size_t>(a + b)] += series[static_cast<std::size_t>(a)] * f[static_cast<std::size_t>(b)];
        }
      }
      series = std::move(prod);
    }

    const Complex pref = std::exp(log_pref);
    for (int r = 1; r <= M; ++r) {
      const int l = M - r;
      Complex t = 0.0;
      for (int a = 0; a <= l; ++a) t += q[static_cast<std::size_t>(a)] * series[static_cast<std::size_t>(l - a)];
      out.terms.push_back({z, r, pref * t});
    }
  }
  std::stable_sort(out.terms.begin(), out.terms.end(), [](const PartialFractionTerm& a, const PartialFractionTerm& b) {
    if (a.root != b.root) return root_less(a.root, b.root);
    return a.order < b.order;
  });
  return out;
}

void raise_for(const ValidationResult& v) {
  if (v.empty()) return;
  for (const auto& x : v) {
    if (x.reason.find("positive axis") != std::string::npos) throw BranchConflict(describe(v));
  }
  throw Divergent(describe(v));
}

}  // namespace

Complex PartialFractionExpansion::evaluate(Complex x) const {
  Complex s = 0.0;
  for (const auto& t : terms) s += t.coeff / std::pow(x - t.root, t.order);
  return s;
}

Complex PartialFractionExpansion::residue_sum() const {
  Complex s = 0.0;
  for (const auto& t : terms) {
    if (t.order == 1) s += t.coeff;
  }
  return s;
}

PartialFractionExpansion partial_fractions(const FactorProduct& fp) {
  const Canonical c = canonical_form(fp);
  return pf_core(c, to_complex(fp.numerator));
}

Complex integrate_expansion(const PartialFractionExpansion& pfe, double m) {
  if (!(m >= 0.0) || !std::isfinite(m)) throw DomainError("exponential weight must be >= 0");
  for (const auto& t : pfe.terms) check_branch(t.root);
  Complex sum = 0.0;
  if (m == 0.0) {
    Complex res = 0.0;
    double mag = 0.0;
    for (const auto& t : pfe.terms) {
      if (t.order == 1) {
        res += t.coeff;
        mag += std::abs(t.coeff);
      }
    }
    if (std::abs(res) > 1e-10 * std::max(mag, 1e-300)) {
      throw Divergent("first-order coefficients do not cancel; the half-line integral diverges");
    }
    for (const auto& t : pfe.terms) {
      const Complex lz = std::log(-t.root);
      if (t.order == 1) {
        sum -= t.coeff * lz;
      } else {
        sum += t.coeff * std::exp((1.0 - t.order) * lz) / (t.order - 1.0);
      }
    }
    return sum;
  }
  for (const auto& t : pfe.terms) {
    const Complex lz = std::log(-t.root);
    Complex I = expint_e1_scaled(-m * t.root);
    for (int r = 2; r <= t.order; ++r) I = (std::exp((1.0 - r) * lz) - m * I) / (r - 1.0);
    sum += t.coeff * I;
  }
  return sum;
}

Complex integrate_rational(const FactorProduct& fp) {
  raise_for(validate(fp));
  const Canonical c = canonical_form(fp);
  const std::vector<Complex> num = to_complex(fp.numerator);
  if (num.empty()) return 0.0;
  if (c.roots.size() == 1) {
    // ∫ x^p/(x−z)^D = (−z)^{p+1−D}·B(p+1, D−p−1), B kept as a product of small ratios.
    const Complex z = c.roots[0].z;
    check_branch(z);
    const int D = c.roots[0].mult;
    const Complex lz = std::log(-z);
    double beta = 1.0 / (D - 1.0);
    Complex sum = 0.0;
    for (std::size_t p = 0; p < num.size(); ++p) {
      if (p > 0) beta *= static_cast<double>(p) / (D - 1.0 - static_cast<double>(p));
      if (num[p] == Complex(0.0, 0.0)) continue;
      sum += num[p] * beta * std::exp(c.log_scale + (static_cast<double>(p) + 1.0 - D) * lz);
    }
    return sum;
  }
  return integrate_expansion(pf_core(c, num), 0.0);
}

Complex integrate_rational_exp(const FactorProduct& fp, double m) {
  if (!(m >= 0.0) || !std::isfinite(m)) throw DomainError("exponential weight must be >= 0");
  if (m == 0.0) return integrate_rational(fp);
  raise_for(validate(fp, m));
  const Canonical c = canonical_form(fp);
  std::vector<Complex> num = to_complex(fp.numerator);
  if (num.empty()) return 0.0;

  Complex poly_part = 0.0;
  if (static_cast<int>(num.size()) > c.degree) {
    // Monic Q = ∏ (x − z)^mult, ascending coefficients.
    std::vector<Complex> Q{1.0};
    for (const auto& r : c.roots) {
      for (int k = 0; k < r.mult; ++k) {
        std::vector<Complex> next(Q.size() + 1, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < Q.size(); ++i) {
          next[i + 1] += Q[i];
          next[i] -= r.z * Q[i];
        }
        Q = std::move(next);
      }
    }
    const std::size_t D = Q.size() - 1;
    std::vector<Complex> quot(num.size() - D, Complex(0.0, 0.0));
    for (std::size_t i = num.size(); i-- > D;) {
      const Complex lead = num[i];
      quot[i - D] = lead;
      for (std::size_t k = 0; k <= D; ++k) num[i - D + k] -= lead * Q[k];
    }
    num.resize(D);
    while (!num.empty() && num.back() == Complex(0.0, 0.0)) num.pop_back();
    // ∫ e^{−mx} x^p dx = p!/m^{p+1}
    double moment = 1.0 / m;
    for (std::size_t p = 0; p < quot.size(); ++p) {
      if (p > 0) moment *= static_cast<double>(p) / m;
      poly_part += quot[p] * moment;
    }
    poly_part *= std::exp(c.log_scale);
  }
  if (num.empty()) return poly_part;
  return poly_part + integrate_expansion(pf_core(c, num), m);
}

FactorProduct ramanujan_factors(RamanujanFamily family, double param, int k) {
  if (k < 1) throw DomainError("ramanujan product needs k >= 1");
  if (!(param > 0.0)) throw DomainError("ramanujan product parameter must be positive");
  FactorProduct fp;
  for (int n = 1; n <= k; ++n) {
    const double slope = family == RamanujanFamily::Geometric ? std::pow(param, n - 1) : 1.0 / (param + n - 1);
    fp.factors.push_back({slope, Complex(0.0, 1.0), 1});
    fp.factors.push_back({slope, Complex(0.0, -1.0), 1});
  }
  return fp;
}

Complex ramanujan_product_integral(RamanujanFamily family, double param, int k) {
  return integrate_rational(ramanujan_factors(family, param, k));
}

}  // namespace squarint
