#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "squarint/expr_core.hpp"
#include "squarint/kernels.hpp"

namespace squarint {

/// Seed used for the digital shifts when none is given.
inline constexpr std::uint64_t kDefaultSeed = 1729;

enum class SeriesMode {
  Auto,   // geometric factor on |z| = 1: direct first, series on Nonconvergent
  Never,
  Force,  // always expand the geometric factor
};

struct CubatureOptions {
  double tolerance = 1e-9;
  long long max_evaluations = 1'000'000;
  long long qmc_points = 1 << 16;  // per shift
  int qmc_shifts = 8;
  std::uint64_t seed = kDefaultSeed;
  SeriesMode series_mode = SeriesMode::Auto;
  Exec exec = Exec::Parallel;
};

struct QuadratureResult {
  Complex value{};
  double error_estimate = 0.0;
  long long evaluations = 0;
  std::string method;
};

/// One term of an orthant integrand: coeff · e^{−β·t} · L(t) with
/// L(t) = Σ a ∏(−tₙ)^{pₙ} (1 when the monomial list is empty).
struct OrthantTerm {
  double coeff = 1.0;
  std::vector<Complex> beta;
  std::vector<LogMonomial> poly;
};

/// Σ_T (term_T) · G(t) / (m + w·t)^j on [0,∞)^k, G = 1/(1 − z e^{−e·t}).
struct OrthantForm {
  int dim = 1;
  std::vector<OrthantTerm> terms;
  std::vector<double> weights;
  int power = 0;
  double shift = 0.0;
  std::optional<GeometricFactor> geometric;
};

OrthantForm to_orthant(const CubeIntegrandSpec& spec);
OrthantForm to_orthant(const CubePlan& plan);

/// Integrand values in either coordinate system (used by the form
/// equivalence checks and the cube-tensor engine).
Complex evaluate_orthant(const OrthantForm& form, std::span<const double> t);
Complex evaluate_cube(const CubeIntegrandSpec& spec, std::span<const double> x);

/// Routing (method = Auto):
///  k = 1                       → tanh-sinh-1d (exp-sinh in t)
///  k ≤ 6, all weights > 0      → radial-simplex
///  otherwise, k ≤ 12           → low-discrepancy
/// Geometric factors on the unit circle fall back to series mode when the
/// direct engine fails to converge. Throws InvalidDim beyond k = 12.
QuadratureResult integrate_cube(const CubeIntegrandSpec& spec, const CubatureOptions& opt = {});
QuadratureResult integrate_cube(const CubePlan& plan, Part part = Part::Value, const CubatureOptions& opt = {});

/// Engines, callable directly.
QuadratureResult integrate_radial_simplex(const OrthantForm& form, Part part, const CubatureOptions& opt);
QuadratureResult integrate_cube_tensor(const CubePlan& plan, Part part, const CubatureOptions& opt);
QuadratureResult integrate_low_discrepancy(const OrthantForm& form, Part part, const CubatureOptions& opt);
/// Expands the geometric factor (if any) and sums per-term closed forms:
/// ∫ e^{−β·t} ∏(−tₙ)^{pₙ}/(m + w·t)^j dt
///   = ∫₀^∞ x^{j−1}/(j−1)! e^{−mx} ∏ (−1)^{pₙ} pₙ!/(βₙ + wₙx)^{pₙ+1} dx,
/// all terms of one geometric index combined in one partial-fraction sum.
QuadratureResult integrate_series_mode(const OrthantForm& form, Part part, const CubatureOptions& opt);

/// K(α,p,q) = ∫∫ (xy)^{α−1} log^p x log^q y / (−log xy) dx dy
///          = (−1)^{p+q} p! q! / ((p+q+1) α^{p+q+1}).
Complex log_moment_kernel(Complex alpha, int p, int q);

/// Richardson extrapolation of t·Σ_{n≥1} f(nt) to t → 0. Each sum is cut at
/// X = t₀·⌈50/t₀⌉ with ∫_X^∞ f added by quadrature, and the known first-order
/// term t·(f(0) − f(X))/2 is added so the remaining error is even in t.
/// Throws Nonconvergent when the last two extrapolants differ by more
/// than tol.
double riemann_limit_sum(const std::function<double(double)>& f, const std::vector<double>& t_sequence,
                         double tol = 1e-6);

}  // namespace squarint
