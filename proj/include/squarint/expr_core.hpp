#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "squarint/expression.hpp"

namespace squarint {

using Complex = std::complex<double>;
using ComplexValue = Complex;

/// Roots closer than this (absolute, after normalizing slopes to 1) are one root.
inline constexpr double kRootMergeTolerance = 1e-12;

// ---------------------------------------------------------------------------
// Half-line rational integrands

/// One factor (a·x + b + c·i)^multiplicity of a denominator product.
struct LinearFactor {
  double slope = 1.0;
  Complex offset{0.0, 0.0};
  int multiplicity = 1;

  /// The zero of the factor, −offset/slope.
  Complex root() const { return -offset / slope; }
  bool operator==(const LinearFactor&) const = default;
};

/// P(x) / ∏ (aₙx + bₙ + cₙi)^{mₙ}. The numerator is stored in ascending
/// degree order, P(x) = Σ numerator[d]·x^d.
struct FactorProduct {
  std::vector<LinearFactor> factors;
  std::vector<double> numerator{1.0};

  int denominator_degree() const;
  int numerator_degree() const;  // −1 for the zero polynomial
  bool operator==(const FactorProduct&) const = default;
};

Complex evaluate(const FactorProduct& fp, Complex x);

// ---------------------------------------------------------------------------
// Unit-cube integrands

/// Σ coeff · ∏ₙ log^{powers[n]}(xₙ)
struct LogMonomial {
  double coeff = 1.0;
  std::vector<int> powers;
  bool operator==(const LogMonomial&) const = default;
};

/// 1 / (1 − z·∏ xₙ^{exps[n]})
struct GeometricFactor {
  Complex z{1.0, 0.0};
  std::vector<double> exps;
  bool operator==(const GeometricFactor&) const = default;
};

/// ∫_{[0,1]^k} ∏ xₙ^{μₙ} · L(x) · G(x) / (m − Σ wₙ log xₙ)^j dx
///
/// with L the optional log-monomial polynomial (1 when empty) and G the
/// optional geometric factor. Under xₙ = e^{−tₙ} this is the orthant integral
/// of e^{−Σ(μₙ+1)tₙ} · L · G / (m + Σ wₙtₙ)^j.
struct CubeIntegrandSpec {
  int dim = 1;
  std::vector<Complex> exponents;
  std::vector<double> log_weights;
  int log_power = 0;
  double log_shift = 0.0;
  std::optional<GeometricFactor> geometric;
  std::vector<LogMonomial> poly_log;

  /// Equal to its own complex conjugate, so the integral is real.
  bool conjugate_symmetric() const;
  bool operator==(const CubeIntegrandSpec&) const = default;
};

// ---------------------------------------------------------------------------
// Series

enum class SeriesFamily {
  Lerch,               // Φ(z, s, a)
  GeometricOfHalfline, // Σ r^n Σ_T coeff_T ∫₀^∞ term_T(n)
  EulerGamma,          // Σ (1/(n+1) − log((n+2)/(n+1)))
  AltLogProduct,       // log ∏ ((an+b)/(an+c))^{(−1)^n}
  PsiSum,              // Σ (±1)^n ψ(n/q) / (n·(n+shift))
  ZetaOfIntegrals,     // Σ_{n≥1} ∫₀^∞ (x/s + n)^{−s} dx
  CustomTerm,          // Σ_{n≥start} expr(n)
  ProductLimit,        // lim_k ∫₀^∞ dx / ∏_{n<k} (1 + x²/(a+n)²)
};

enum class Acceleration { None, AlternatingTransform, TailIntegralBound };

/// Affine-in-n linear factor: slope·x + offset + n·offset_step.
struct ParametricFactor {
  double slope = 1.0;
  Complex offset{0.0, 0.0};
  Complex offset_step{0.0, 0.0};
  int multiplicity = 1;
  bool operator==(const ParametricFactor&) const = default;
};

/// coeff · ∫₀^∞ e^{−(m0 + m1·n)x} P(x) / ∏ factors(n) dx
struct ParametricHalflineTerm {
  double coeff = 1.0;
  std::vector<ParametricFactor> factors;
  std::vector<double> numerator{1.0};
  double exp_weight = 0.0;
  double exp_weight_step = 0.0;

  FactorProduct at(double n) const;
  double weight_at(double n) const { return exp_weight + exp_weight_step * n; }
  bool operator==(const ParametricHalflineTerm&) const = default;
};

struct SeriesSpec {
  SeriesFamily family = SeriesFamily::Lerch;
  std::map<std::string, double, std::less<>> params;
  Acceleration acceleration = Acceleration::None;
  std::vector<ParametricHalflineTerm> halfline_terms;  // GeometricOfHalfline
  std::optional<Expr> term;                            // CustomTerm

  double param(std::string_view key) const;
  double param_or(std::string_view key, double fallback) const;
  bool operator==(const SeriesSpec&) const = default;
};

std::string to_string(SeriesFamily f);
std::optional<SeriesFamily> series_family_from_string(std::string_view s);
std::string to_string(Acceleration a);
std::optional<Acceleration> acceleration_from_string(std::string_view s);

// ---------------------------------------------------------------------------
// Identity plans

struct HalflinePlan {
  FactorProduct product;
  double exp_weight = 0.0;  // m in ∫ e^{−mx} P/Q
  bool operator==(const HalflinePlan&) const = default;
};

struct CubeTerm {
  double coeff = 1.0;
  CubeIntegrandSpec spec;
  bool operator==(const CubeTerm&) const = default;
};

/// A weighted sum of cube integrands sharing dim, log weights, log power,
/// shift and geometric factor. The terms are integrated jointly, which lets
/// individually divergent pieces (e.g. (1−x)/((1−xy)log xy)) cancel.
/// Engine choice for a cube plan; Auto routes by dimension and weights.
enum class CubeMethod { Auto, RadialSimplex, CubeTensor, LowDiscrepancy, Series };
std::string to_string(CubeMethod m);
std::optional<CubeMethod> cube_method_from_string(std::string_view s);

struct CubePlan {
  std::vector<CubeTerm> terms;
  CubeMethod method = CubeMethod::Auto;
  bool operator==(const CubePlan&) const = default;
};

struct SeriesPlan {
  SeriesSpec spec;
  bool operator==(const SeriesPlan&) const = default;
};

struct ConstantPlan {
  Expr expr;
  bool operator==(const ConstantPlan&) const = default;
};

using PlanLeaf = std::variant<HalflinePlan, CubePlan, SeriesPlan, ConstantPlan>;

enum class Part { Value, Real, Imag };
std::string to_string(Part p);
std::optional<Part> part_from_string(std::string_view s);

struct PlanTerm {
  double coeff = 1.0;
  Part part = Part::Value;
  PlanLeaf leaf;
  bool operator==(const PlanTerm&) const = default;
};

/// Σ coeff · part(leaf)
struct Plan {
  std::vector<PlanTerm> terms;
  bool operator==(const Plan&) const = default;
};

std::string leaf_kind(const PlanLeaf& leaf);

enum class Trust { Asserted, SuspectedTypo };
std::string to_string(Trust t);
std::optional<Trust> trust_from_string(std::string_view s);

struct IdentityRecord {
  std::string id;
  std::string description;
  std::string paper_location;
  double tolerance = 1e-9;
  Trust trust = Trust::Asserted;
  Plan lhs;
  Plan rhs;
  bool operator==(const IdentityRecord&) const = default;
};

enum class Status { Pass, Fail, Flagged };
std::string to_string(Status s);

struct EngineDiagnostics {
  std::string plan;  // "lhs" or "rhs"
  std::string method;
  long long evaluations = 0;
  double error_estimate = 0.0;
  long long truncation_index = 0;
  bool operator==(const EngineDiagnostics&) const = default;
};

struct VerificationReport {
  std::string id;
  Complex lhs_value{};
  Complex rhs_value{};
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  Trust trust = Trust::Asserted;
  std::vector<EngineDiagnostics> diagnostics;
  Status status = Status::Fail;
  std::string failure;  // engine error text, empty when both sides evaluated
  bool operator==(const VerificationReport&) const = default;
};

/// PASS iff abs ≤ tol or rel ≤ tol; otherwise FLAGGED for suspected typos,
/// FAIL for asserted identities.
Status classify(double abs_error, double rel_error, double tolerance, Trust trust);

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string field;
  std::string reason;
};

using ValidationResult = std::vector<Violation>;

/// Convergence preconditions of ∫₀^∞ P/Q (degree, poles off [0,∞)).
ValidationResult validate(const FactorProduct& fp);
/// Preconditions of ∫₀^∞ e^{−mx} P/Q; m > 0 relaxes the degree rule to D ≥ 1.
ValidationResult validate(const FactorProduct& fp, double exp_weight);
ValidationResult validate(const CubeIntegrandSpec& spec);
ValidationResult validate(const SeriesSpec& spec);
ValidationResult validate(const Plan& plan);
ValidationResult validate(const IdentityRecord& record);

std::string describe(const ValidationResult& r);

/// Slopes normalized to 1 (scale folded into the numerator), roots within
/// kRootMergeTolerance coalesced, factors ordered by root (re, im).
FactorProduct canonicalize(const FactorProduct& fp);

}  // namespace squarint
