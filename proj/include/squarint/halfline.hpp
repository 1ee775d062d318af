#pragma once

#include <vector>

#include "squarint/expr_core.hpp"

namespace squarint {

/// Distinct canonical roots closer than this raise IllConditioned.
inline constexpr double kRootSeparationLimit = 1e-9;

struct PartialFractionTerm {
  Complex root;
  int order = 1;
  Complex coeff;
};

/// P(x)/∏(aₙx + bₙ + cₙi)^{mₙ} = Σ coeff/(x − root)^order.
/// `global_scale` = ∏ aₙ^{−mₙ} is already folded into every coefficient and
/// is reported for information (it may overflow for very long products).
struct PartialFractionExpansion {
  std::vector<PartialFractionTerm> terms;
  Complex global_scale{1.0, 0.0};

  Complex evaluate(Complex x) const;
  /// Σ of the first-order coefficients.
  Complex residue_sum() const;
};

/// Coefficients per root from the Taylor expansion at that root:
/// P(z+h) by repeated synthetic division, times ∏_{i≠j}(1 + h/dᵢ)^{−mᵢ},
/// with the constant prefactor carried in log space. Requires a proper
/// numerator (deg P < D).
PartialFractionExpansion partial_fractions(const FactorProduct& fp);

/// ∫₀^∞ P/Q dx, principal branch.
Complex integrate_rational(const FactorProduct& fp);

/// ∫₀^∞ e^{−mx} P/Q dx through e^{w}E₁(w), w = −m·root, and the recurrence
/// I_r = ((−z)^{1−r} − m·I_{r−1})/(r−1). Improper numerators are split off
/// by polynomial division (each x^p contributes p!/m^{p+1}).
Complex integrate_rational_exp(const FactorProduct& fp, double m);

/// Integrates an already expanded sum of partial fractions. For m = 0 the
/// first-order coefficients must cancel (Divergent otherwise).
Complex integrate_expansion(const PartialFractionExpansion& pfe, double m = 0.0);

enum class RamanujanFamily { Geometric, Shifted };

/// Geometric: ∏_{n=1..k} (1 + r^{2(n−1)}x²); Shifted: ∏ (1 + x²/(a+n−1)²),
/// each written as two conjugate linear factors.
FactorProduct ramanujan_factors(RamanujanFamily family, double param, int k);

/// ∫₀^∞ dx / product above. The value is real; the imaginary part left
/// over is rounding only.
Complex ramanujan_product_integral(RamanujanFamily family, double param, int k);

}  // namespace squarint
