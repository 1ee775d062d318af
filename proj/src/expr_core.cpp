#include "squarint/expr_core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "squarint/errors.hpp"

namespace squarint {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool lies_on_positive_axis(Complex root) {
  const double scale = std::max(1.0, std::abs(root));
  return std::abs(root.imag()) <= 1e-14 * scale && root.real() >= -1e-14 * scale;
}

void add(ValidationResult& r, std::string field, std::string reason) {
  r.push_back({std::move(field), std::move(reason)});
}

ValidationResult validate_factors(const FactorProduct& fp) {
  ValidationResult r;
  if (fp.factors.empty()) add(r, "factors", "empty denominator");
  for (std::size_t i = 0; i < fp.factors.size(); ++i) {
    const auto& f = fp.factors[i];
    const std::string field = "factors[" + std::to_string(i) + "]";
    if (!std::isfinite(f.slope) || !finite(f.offset)) {
      add(r, field, "non-finite parameter");
      continue;
    }
    if (f.slope == 0.0) add(r, field, "slope a must be nonzero");
    if (f.multiplicity < 1) add(r, field, "multiplicity must be >= 1");
    if (f.slope != 0.0 && lies_on_positive_axis(f.root())) {
      std::ostringstream os;
      os << "root on positive axis (root at x=" << f.root().real() << ")";
      add(r, field, os.str());
    }
  }
  for (std::size_t d = 0; d < fp.numerator.size(); ++d) {
    if (!std::isfinite(fp.numerator[d])) add(r, "numerator", "non-finite coefficient");
  }
  return r;
}

}  // namespace

int FactorProduct::denominator_degree() const {
  int d = 0;
  for (const auto& f : factors) d += f.multiplicity;
  return d;
}

int FactorProduct::numerator_degree() const {
  for (int d = static_cast<int>(numerator.size()) - 1; d >= 0; --d) {
    if (numerator[static_cast<std::size_t>(d)] != 0.0) return d;
  }
  return -1;
}

Complex evaluate(const FactorProduct& fp, Complex x) {
  Complex num = 0.0;
  for (auto it = fp.numerator.rbegin(); it != fp.numerator.rend(); ++it) num = num * x + *it;
  Complex den = 1.0;
  for (const auto& f : fp.factors) den *= std::pow(f.slope * x + f.offset, f.multiplicity);
  return num / den;
}

bool CubeIntegrandSpec::conjugate_symmetric() const {
  for (const auto& mu : exponents) {
    if (mu.imag() != 0.0) return false;
  }
  return !geometric || geometric->z.imag() == 0.0;
}

FactorProduct ParametricHalflineTerm::at(double n) const {
  FactorProduct fp;
  fp.numerator = numerator;
  fp.factors.reserve(factors.size());
  for (const auto& f : factors) {
    fp.factors.push_back({f.slope, f.offset + n * f.offset_step, f.multiplicity});
  }
  return fp;
}

double SeriesSpec::param(std::string_view key) const {
  auto it = params.find(key);
  if (it == params.end()) throw DomainError("series parameter '" + std::string(key) + "' missing");
  return it->second;
}

double SeriesSpec::param_or(std::string_view key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

// ---------------------------------------------------------------------------

namespace {

struct FamilyName {
  SeriesFamily family;
  const char* name;
  std::vector<std::string> required;
};

const std::vector<FamilyName>& family_table() {
  static const std::vector<FamilyName> table = {
      {SeriesFamily::Lerch, "lerch", {"z_re", "z_im", "s", "a"}},
      {SeriesFamily::GeometricOfHalfline, "geometric-of-halfline", {"r_re", "r_im"}},
      {SeriesFamily::EulerGamma, "euler-gamma", {}},
      {SeriesFamily::AltLogProduct, "alt-log-product", {"a", "b", "c"}},
      {SeriesFamily::PsiSum, "psi-sum", {"q", "alternating", "second", "shift"}},
      {SeriesFamily::ZetaOfIntegrals, "zeta-of-integrals", {"s"}},
      {SeriesFamily::CustomTerm, "custom-term", {"start"}},
      {SeriesFamily::ProductLimit, "product-limit", {"a", "kmax"}},
  };
  return table;
}

}  // namespace

std::string to_string(SeriesFamily f) {
  for (const auto& e : family_table()) {
    if (e.family == f) return e.name;
  }
  return "?";
}

std::optional<SeriesFamily> series_family_from_string(std::string_view s) {
  for (const auto& e : family_table()) {
    if (s == e.name) return e.family;
  }
  return std::nullopt;
}

std::string to_string(Acceleration a) {
  switch (a) {
    case Acceleration::None: return "none";
    case Acceleration::AlternatingTransform: return "alternating-transform";
    case Acceleration::TailIntegralBound: return "tail-integral-bound";
  }
  return "?";
}

std::optional<Acceleration> acceleration_from_string(std::string_view s) {
  for (auto a : {Acceleration::None, Acceleration::AlternatingTransform, Acceleration::TailIntegralBound}) {
    if (s == to_string(a)) return a;
  }
  return std::nullopt;
}

std::string to_string(Part p) {
  switch (p) {
    case Part::Value: return "value";
    case Part::Real: return "re";
    case Part::Imag: return "im";
  }
  return "?";
}

std::optional<Part> part_from_string(std::string_view s) {
  for (auto p : {Part::Value, Part::Real, Part::Imag}) {
    if (s == to_string(p)) return p;
  }
  return std::nullopt;
}

std::string to_string(Trust t) { return t == Trust::Asserted ? "asserted" : "suspected-typo"; }

std::optional<Trust> trust_from_string(std::string_view s) {
  if (s == "asserted") return Trust::Asserted;
  if (s == "suspected-typo") return Trust::SuspectedTypo;
  return std::nullopt;
}

std::string to_string(CubeMethod m) {
  switch (m) {
    case CubeMethod::Auto: return "auto";
    case CubeMethod::RadialSimplex: return "radial-simplex";
    case CubeMethod::CubeTensor: return "cube-tensor";
    case CubeMethod::LowDiscrepancy: return "low-discrepancy";
    case CubeMethod::Series: return "series";
  }
  return "?";
}

std::optional<CubeMethod> cube_method_from_string(std::string_view s) {
  for (auto m : {CubeMethod::Auto, CubeMethod::RadialSimplex, CubeMethod::CubeTensor, CubeMethod::LowDiscrepancy,
                 CubeMethod::Series}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Flagged: return "FLAGGED";
  }
  return "?";
}

std::string leaf_kind(const PlanLeaf& leaf) {
  return std::visit(
      [](const auto& l) -> std::string {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, HalflinePlan>) return "halfline";
        if constexpr (std::is_same_v<T, CubePlan>) return "cube";
        if constexpr (std::is_same_v<T, SeriesPlan>) return "series";
        if constexpr (std::is_same_v<T, ConstantPlan>) return "const";
      },
      leaf);
}

Status classify(double abs_error, double rel_error, double tolerance, Trust trust) {
  if (abs_error <= tolerance || rel_error <= tolerance) return Status::Pass;
  return trust == Trust::SuspectedTypo ? Status::Flagged : Status::Fail;
}

// ---------------------------------------------------------------------------
// Validation

ValidationResult validate(const FactorProduct& fp) {
  ValidationResult r = validate_factors(fp);
  const int D = fp.denominator_degree();
  if (!fp.factors.empty() && D < 2) {
    add(r, "factors", "degree " + std::to_string(D) + " < 2");
  }
  if (fp.numerator_degree() > D - 2 && D >= 2) {
    add(r, "numerator", "numerator degree " + std::to_string(fp.numerator_degree()) +
                            " exceeds D-2 = " + std::to_string(D - 2));
  }
  return r;
}

ValidationResult validate(const FactorProduct& fp, double exp_weight) {
  if (exp_weight == 0.0) return validate(fp);
  ValidationResult r = validate_factors(fp);
  if (!(exp_weight > 0.0) || !std::isfinite(exp_weight)) add(r, "m", "exponential weight must be >= 0");
  return r;
}

ValidationResult validate(const CubeIntegrandSpec& spec) {
  ValidationResult r;
  const auto k = static_cast<std::size_t>(std::max(spec.dim, 0));
  if (spec.dim < 1) add(r, "dim", "k must be >= 1");
  if (spec.exponents.size() != k) add(r, "exponents", "expected one exponent per variable");
  if (spec.log_weights.size() != k) add(r, "log_weights", "expected one weight per variable");
  for (std::size_t n = 0; n < spec.exponents.size(); ++n) {
    if (!finite(spec.exponents[n])) {
      add(r, "exponents", "non-finite exponent");
    } else if (!(spec.exponents[n].real() > -1.0)) {
      add(r, "exponents", "Re(mu[" + std::to_string(n) + "]) must exceed -1");
    }
  }
  bool any_weight = false;
  for (double w : spec.log_weights) {
    if (!std::isfinite(w) || w < 0.0) add(r, "log_weights", "weights must be finite and non-negative");
    any_weight = any_weight || w != 0.0;
  }
  if (spec.log_power < 0) add(r, "log_power", "j must be >= 0");
  if (spec.log_power >= 1 && !any_weight) add(r, "log_weights", "all weights zero with j >= 1");
  if (!(spec.log_shift >= 0.0) || !std::isfinite(spec.log_shift)) add(r, "log_shift", "m must be >= 0");
  if (spec.geometric) {
    const auto& g = *spec.geometric;
    if (g.exps.size() != k) add(r, "geometric", "expected one exponent per variable");
    if (!finite(g.z)) add(r, "geometric", "non-finite z");
    if (std::abs(g.z) > 1.0 + 1e-15) add(r, "geometric", "|z| must be <= 1");
    bool any = false;
    for (double e : g.exps) {
      if (!std::isfinite(e) || e < 0.0) add(r, "geometric", "exponents must be non-negative");
      any = any || e > 0.0;
    }
    if (!any && g.exps.size() == k) add(r, "geometric", "all geometric exponents zero");
  }
  for (const auto& mono : spec.poly_log) {
    if (mono.powers.size() != k) add(r, "poly_log", "expected one power per variable");
    for (int p : mono.powers) {
      if (p < 0) add(r, "poly_log", "log powers must be >= 0");
    }
    if (!std::isfinite(mono.coeff)) add(r, "poly_log", "non-finite coefficient");
  }
  return r;
}

ValidationResult validate(const SeriesSpec& spec) {
  ValidationResult r;
  for (const auto& e : family_table()) {
    if (e.family != spec.family) continue;
    for (const auto& key : e.required) {
      if (!spec.params.contains(key)) add(r, "params", "missing parameter '" + key + "'");
    }
  }
  for (const auto& [key, value] : spec.params) {
    if (!std::isfinite(value)) add(r, "params", "parameter '" + key + "' not finite");
  }
  if (!r.empty()) return r;

  switch (spec.family) {
    case SeriesFamily::Lerch: {
      const Complex z{spec.param("z_re"), spec.param("z_im")};
      const double s = spec.param("s");
      if (std::abs(z) > 1.0 + 1e-15) add(r, "z", "|z| must be <= 1");
      if (!(spec.param("a") > 0.0)) add(r, "a", "a must be > 0");
      if (z == Complex(1.0, 0.0) && !(s > 1.0)) add(r, "s", "z = 1 requires s > 1");
      if (!(s >= 1.0)) add(r, "s", "s must be >= 1");
      break;
    }
    case SeriesFamily::GeometricOfHalfline: {
      const Complex ratio{spec.param("r_re"), spec.param("r_im")};
      if (std::abs(ratio) > 1.0 + 1e-15) add(r, "r", "|r| must be <= 1");
      if (spec.halfline_terms.empty()) add(r, "terms", "no half-line terms");
      const double start = spec.param_or("start", 0.0);
      for (const auto& t : spec.halfline_terms) {
        for (double n : {start, start + 1.0, start + 7.0}) {
          auto v = validate(t.at(n), t.weight_at(n));
          for (auto& x : v) r.push_back({"terms(n=" + std::to_string(static_cast<int>(n)) + ")." + x.field, x.reason});
        }
      }
      break;
    }
    case SeriesFamily::AltLogProduct:
      for (const char* key : {"a", "b", "c"}) {
        if (!(spec.param(key) > 0.0)) add(r, key, "parameters must be positive");
      }
      break;
    case SeriesFamily::PsiSum:
      if (!(spec.param("q") > 0.0)) add(r, "q", "q must be positive");
      if (spec.param("shift") < 0.0) add(r, "shift", "shift must be >= 0");
      break;
    case SeriesFamily::ZetaOfIntegrals:
      if (!(spec.param("s") > 2.0)) add(r, "s", "s must exceed 2 for convergence");
      break;
    case SeriesFamily::CustomTerm:
      if (!spec.term) add(r, "term", "custom-term requires a term expression");
      break;
    case SeriesFamily::ProductLimit:
      if (!(spec.param("a") > 0.0)) add(r, "a", "a must be positive");
      if (spec.param("kmax") < 8.0) add(r, "kmax", "kmax must be >= 8");
      break;
    case SeriesFamily::EulerGamma:
      break;
  }
  return r;
}

ValidationResult validate(const Plan& plan) {
  ValidationResult r;
  if (plan.terms.empty()) add(r, "plan", "empty plan");
  for (const auto& term : plan.terms) {
    if (!std::isfinite(term.coeff)) add(r, "plan", "non-finite coefficient");
    std::visit(
        [&](const auto& leaf) {
          using T = std::decay_t<decltype(leaf)>;
          ValidationResult sub;
          if constexpr (std::is_same_v<T, HalflinePlan>) {
            sub = validate(leaf.product, leaf.exp_weight);
          } else if constexpr (std::is_same_v<T, CubePlan>) {
            if (leaf.terms.empty()) add(sub, "cube", "no terms");
            for (const auto& t : leaf.terms) {
              auto v = validate(t.spec);
              sub.insert(sub.end(), v.begin(), v.end());
            }
            if (!leaf.terms.empty()) {
              const auto& first = leaf.terms.front().spec;
              for (const auto& t : leaf.terms) {
                const auto& s = t.spec;
                if (s.dim != first.dim || s.log_weights != first.log_weights || s.log_power != first.log_power ||
                    s.log_shift != first.log_shift || s.geometric != first.geometric) {
                  add(sub, "cube", "terms must share dim, weights, power, shift and geometric factor");
                }
              }
            }
          } else if constexpr (std::is_same_v<T, SeriesPlan>) {
            sub = validate(leaf.spec);
          } else {
            try {
              (void)evaluate(leaf.expr);
            } catch (const Error& e) {
              add(sub, "const", e.what());
            }
          }
          r.insert(r.end(), sub.begin(), sub.end());
        },
        term.leaf);
  }
  return r;
}

ValidationResult validate(const IdentityRecord& record) {
  ValidationResult r;
  if (record.id.empty()) add(r, "id", "empty id");
  if (!(record.tolerance > 0.0)) add(r, "tolerance", "tolerance must be > 0");
  for (auto& v : validate(record.lhs)) r.push_back({"lhs." + v.field, v.reason});
  for (auto& v : validate(record.rhs)) r.push_back({"rhs." + v.field, v.reason});
  return r;
}

std::string describe(const ValidationResult& r) {
  std::string out;
  for (const auto& v : r) {
    if (!out.empty()) out += "; ";
    out += v.field + ": " + v.reason;
  }
  return out;
}

FactorProduct canonicalize(const FactorProduct& fp) {
  struct Root {
    Complex z;
    int multiplicity;
  };
  std::vector<Root> roots;
  double scale = 1.0;
  for (const auto& f : fp.factors) {
    roots.push_back({f.root(), f.multiplicity});
    scale /= std::pow(f.slope, f.multiplicity);
  }
  std::stable_sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  });
  std::vector<Root> merged;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    Root r = roots[i];
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j].z - r.z) <= kRootMergeTolerance) {
        r.multiplicity += roots[j].multiplicity;
        used[j] = true;
      }
    }
    merged.push_back(r);
  }

  FactorProduct out;
  out.numerator = fp.numerator;
  for (double& c : out.numerator) c *= scale;
  for (const auto& r : merged) out.factors.push_back({1.0, -r.z, r.multiplicity});
  return out;
}

}  // namespace squarint
