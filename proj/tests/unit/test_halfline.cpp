#include <cmath>
#include <numbers>
#include <random>

#include "../oracles/gauss_kronrod.hpp"
#include "../oracles/golden.hpp"
#include "doctest.h"
#include "squarint/errors.hpp"
#include "squarint/halfline.hpp"

using namespace squarint;

namespace {

LinearFactor lf(double a, double b, double c, int m = 1) { return {a, {b, c}, m}; }

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_SUITE("halfline") {
  TEST_CASE("two distinct factors: (1/2 - i/2) log 2") {
    const FactorProduct fp{{lf(1, 1, 1), lf(2, 1, 1)}, {1.0}};
    const Complex want = Complex(0.5, -0.5) * golden::log2;
    CHECK(std::abs(integrate_rational(fp) - want) < 1e-12);
  }

  TEST_CASE("cubic example (x+4)(2x+3)(3x+2)") {
    const FactorProduct fp{{lf(1, 4, 0), lf(2, 3, 0), lf(3, 2, 0)}, {1.0}};
    const Complex v = integrate_rational(fp);
    CHECK(std::abs(v.real() - golden::t1_ex3) < 1e-12);
    CHECK(std::abs(v.imag()) < 1e-15);
  }

  TEST_CASE("(x+1+i)^-n for n = 2..50 against the polar form") {
    for (int n = 2; n <= 50; ++n) {
      CAPTURE(n);
      const FactorProduct fp{{lf(1, 1, 1, n)}, {1.0}};
      const Complex v = integrate_rational(fp);
      const double mod = std::pow(2.0, (1.0 - n) / 2.0) / (n - 1);
      const double th = std::numbers::pi * (n - 1) / 4.0;
      CHECK(std::abs(v.real() - mod * std::cos(th)) <= 1e-12 * mod);
      CHECK(std::abs(-v.imag() - mod * std::sin(th)) <= 1e-12 * mod);
    }
  }

  TEST_CASE("(x+1+i)^-2015 stays in range") {
    const FactorProduct fp{{lf(1, 1, 1, 2015)}, {1.0}};
    const Complex v = integrate_rational(fp);
    CHECK(std::abs(v.real()) <= 1e-10 * std::abs(v.imag()));
    CHECK(v.imag() > 0.0);
    CHECK(std::abs(std::log(v.imag()) - golden::n2015_log_abs) < 1e-10 * std::abs(golden::n2015_log_abs));
    CHECK(std::abs(-v.imag() - (-std::ldexp(1.0, -1007) / 2014.0)) <= 1e-10 * std::ldexp(1.0, -1007) / 2014.0);
  }

  TEST_CASE("x/(x+1)^1500 = 1/2245502") {
    const FactorProduct fp{{lf(1, 1, 0, 1500)}, {0.0, 1.0}};
    const Complex v = integrate_rational(fp);
    CHECK(rel(v, golden::t2_ex3) < 1e-14);
  }

  TEST_CASE("Dirichlet closed form") {
    const FactorProduct fp{{lf(1, 0, -1), lf(1, 0, 1)}, {1.0}};
    CHECK(std::abs(integrate_rational(fp).real() - std::numbers::pi / 2) < 1e-15);
  }

  TEST_CASE("exponential weight: e^{-x} x/(x+1)^2 = 2e E_1(1) - 1") {
    const FactorProduct fp{{lf(1, 1, 0, 2)}, {0.0, 1.0}};
    CHECK(std::abs(integrate_rational_exp(fp, 1.0).real() - golden::t99_n2) < 1e-13);
    // improper numerator: e^{-x}(x^2 + 1)/(x+1) splits off x - 1 by division
    const FactorProduct improper{{lf(1, 1, 0)}, {1.0, 0.0, 1.0}};
    const auto ref = oracle::integrate_to_infinity(
        [](double x) { return Complex(std::exp(-x) * (x * x + 1.0) / (x + 1.0)); });
    CHECK(std::abs(integrate_rational_exp(improper, 1.0) - ref.value) < 1e-11);
  }

  TEST_CASE("partial fractions reproduce the integrand") {
    const FactorProduct fp{{lf(1, 1, 1, 2), lf(2, 3, -1), lf(1, 0.5, 0, 3)}, {1.0, -2.0, 0.5}};
    const auto pfe = partial_fractions(fp);
    for (double x : {0.0, 0.3, 1.0, 7.5}) CHECK(rel(pfe.evaluate(x), evaluate(fp, x)) < 1e-11);
    CHECK(std::abs(pfe.residue_sum()) < 1e-12);
  }

  TEST_CASE("random products agree with the Gauss-Kronrod oracle") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> slope(0.5, 3.0), off(0.2, 3.0), im(-2.0, 2.0), coef(-1.0, 1.0);
    std::uniform_int_distribution<int> nfac(2, 4), mult(1, 2);
    for (int trial = 0; trial < 25; ++trial) {
      FactorProduct fp;
      const int n = nfac(rng);
      for (int i = 0; i < n; ++i) fp.factors.push_back(lf(slope(rng), off(rng), im(rng), mult(rng)));
      fp.numerator = {coef(rng) + 2.0, coef(rng)};
      if (fp.denominator_degree() - fp.numerator_degree() < 2) fp.numerator.pop_back();
      CAPTURE(trial);
      const auto ref = oracle::integrate_to_infinity([&](double x) { return evaluate(fp, x); }, 0.0, 1e-14, 1e-13);
      CHECK(rel(integrate_rational(fp), ref.value) < 1e-9);
      const double m = 0.25 + trial * 0.1;
      const auto ref_exp =
          oracle::integrate_to_infinity([&](double x) { return std::exp(-m * x) * evaluate(fp, x); }, 0.0, 1e-14, 1e-13);
      CHECK(rel(integrate_rational_exp(fp, m), ref_exp.value) < 1e-9);
    }
  }

  TEST_CASE("failure modes") {
    CHECK_THROWS_AS(integrate_rational(FactorProduct{{lf(1, 1, 1)}, {1.0}}), Divergent);
    CHECK_THROWS_AS(integrate_rational(FactorProduct{{lf(1, 1, 0), lf(1, 2, 0)}, {0.0, 1.0}}), Divergent);
    CHECK_THROWS_AS(integrate_rational(FactorProduct{{lf(1, -1, 0), lf(1, 1, 0)}, {1.0}}), BranchConflict);
    CHECK_THROWS_AS(integrate_rational(FactorProduct{{lf(1, 1, 1), lf(1, 1 + 1e-10, 1)}, {1.0}}), IllConditioned);
    CHECK_THROWS_AS(integrate_rational_exp(FactorProduct{{lf(1, 1, 1)}, {1.0}}, -1.0), DomainError);
    // roots within the merge tolerance are one double root, not an error
    const FactorProduct merged{{lf(1, 1, 1), lf(1, 1 + 1e-13, 1)}, {1.0}};
    CHECK(std::abs(integrate_rational(merged) - Complex(0.5, -0.5)) < 1e-12);
  }

  TEST_CASE("ramanujan products") {
    CHECK(ramanujan_product_integral(RamanujanFamily::Geometric, 0.5, 1).real() ==
          doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    // k = 2: pi / (2(1 + r))
    for (double r : {0.25, 0.5, 0.9}) {
      CHECK(std::abs(ramanujan_product_integral(RamanujanFamily::Geometric, r, 2).real() - std::numbers::pi / (2 * (1 + r))) <
            1e-14);
    }
    for (const auto& g : golden::ram2_a1_finite) {
      const Complex v = ramanujan_product_integral(RamanujanFamily::Shifted, 1.0, static_cast<int>(g.x));
      CHECK(std::abs(v.real() - g.v) < 1e-13);
      CHECK(std::abs(v.imag()) < 1e-10);
    }
    const FactorProduct fp = ramanujan_factors(RamanujanFamily::Geometric, 0.5, 3);
    CHECK(fp.factors.size() == 6);
    CHECK_THROWS_AS(ramanujan_factors(RamanujanFamily::Shifted, -1.0, 3), DomainError);
  }
}
