#include <cmath>
#include <numbers>
#include <stdexcept>

#include "../oracles/gauss_kronrod.hpp"
#include "../oracles/golden.hpp"
#include "doctest.h"
#include "squarint/cubature.hpp"
#include "squarint/errors.hpp"
#include "squarint/halfline.hpp"

using namespace squarint;

namespace {

CubeIntegrandSpec make_spec(std::vector<Complex> mu, std::vector<double> w, int j, double m = 0.0) {
  CubeIntegrandSpec s;
  s.dim = static_cast<int>(mu.size());
  s.exponents = std::move(mu);
  s.log_weights = std::move(w);
  s.log_power = j;
  s.log_shift = m;
  return s;
}

CubePlan plan_of(const CubeIntegrandSpec& s, CubeMethod method = CubeMethod::Auto) {
  return CubePlan{{CubeTerm{1.0, s}}, method};
}

CubatureOptions tight() {
  CubatureOptions o;
  o.tolerance = 1e-10;
  return o;
}

}  // namespace

TEST_SUITE("cubature") {
  TEST_CASE("2-D exponential forms of the (x+1+i)(2x+1+i) example") {
    const Complex i1(0.0, 1.0);
    const auto s = make_spec({i1, i1}, {1.0, 2.0}, 1);
    const auto cos_form = integrate_cube(plan_of(s), Part::Real, tight());
    const auto sin_form = integrate_cube(plan_of(s), Part::Imag, tight());
    CHECK(std::abs(cos_form.value.real() - golden::log2 / 2) < 1e-8);
    CHECK(std::abs(-sin_form.value.real() - golden::log2 / 2) < 1e-8);
    CHECK(cos_form.method == "radial-simplex");
    const auto full = integrate_cube(s, tight());
    CHECK(std::abs(full.value - Complex(0.5, -0.5) * golden::log2) < 1e-8);
  }

  TEST_CASE("three routes on the cubic example") {
    const auto s = make_spec({3.0, 2.0, 1.0}, {1.0, 2.0, 3.0}, 1);
    const auto radial = integrate_radial_simplex(to_orthant(s), Part::Value, tight());
    CubatureOptions o = tight();
    o.tolerance = 1e-8;
    const auto tensor = integrate_cube_tensor(plan_of(s), Part::Value, o);
    const auto closed = integrate_rational(FactorProduct{{{1, {4, 0}, 1}, {2, {3, 0}, 1}, {3, {2, 0}, 1}}, {1.0}});
    CHECK(std::abs(radial.value.real() - golden::t1_ex3) < 1e-9);
    CHECK(std::abs(tensor.value.real() - golden::t1_ex3) < 1e-7);
    CHECK(std::abs(closed.real() - golden::t1_ex3) < 1e-12);
    CHECK(std::abs(radial.value - tensor.value) <= 3 * (radial.error_estimate + tensor.error_estimate) + 1e-12);
  }

  TEST_CASE("engines agree within three times the combined estimates") {
    const auto s = make_spec({0.5, 0.0}, {1.0, 1.5}, 2, 0.5);
    const auto radial = integrate_radial_simplex(to_orthant(s), Part::Value, tight());
    CubatureOptions o;
    o.qmc_points = 1 << 14;
    const auto ld = integrate_low_discrepancy(to_orthant(s), Part::Value, o);
    const auto series = integrate_series_mode(to_orthant(s), Part::Value, o);
    CHECK(std::abs(radial.value - series.value) <= 3 * (radial.error_estimate + series.error_estimate) + 1e-12);
    CHECK(std::abs(radial.value - ld.value) <= 3 * (radial.error_estimate + ld.error_estimate));
    CHECK(ld.method == "low-discrepancy");
  }

  TEST_CASE("1/(n-1) for the pure log-power integrand") {
    for (int k = 2; k <= 5; ++k) {
      CAPTURE(k);
      const auto s = make_spec(std::vector<Complex>(k, 0.0), std::vector<double>(k, 1.0), 1);
      CHECK(std::abs(integrate_cube(s, tight()).value.real() - 1.0 / (k - 1)) < 1e-8);
    }
  }

  TEST_CASE("exponential weight: two-fold T99 form") {
    for (const auto& g : golden::t99) {
      const int n = static_cast<int>(g.x);
      const auto s = make_spec({0.0, 0.0}, {1.0, 1.0}, n, 1.0);
      CHECK(std::abs(integrate_cube(s, tight()).value.real() - g.v) < 1e-8);
    }
  }

  TEST_CASE("log-moment kernel against the 2-D Gauss-Kronrod oracle (18 points)") {
    int points = 0;
    for (double alpha : {1.0, 1.5, 2.0}) {
      for (auto [p, q] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}}) {
        const auto ref = oracle::integrate_orthant2(
            [&](double s, double t) {
              if (s + t == 0.0) return Complex(0.0);
              return Complex(std::exp(-alpha * (s + t)) * std::pow(-s, p) * std::pow(-t, q) / (s + t));
            },
            1e-12);
        CAPTURE(alpha);
        CAPTURE(p);
        CAPTURE(q);
        CHECK(std::abs(log_moment_kernel(alpha, p, q) - ref.value) < 1e-9);
        ++points;
      }
    }
    CHECK(points == 18);
  }

  TEST_CASE("kernel consistency: truncated geometric sum, N = 50, alpha = 1") {
    // sum_{n<50} (xy)^n log x log^2 y / (-log xy) integrated jointly vs sum of kernel values
    for (auto [p, q] : {std::pair{0, 0}, {1, 2}, {2, 1}}) {
      CubePlan plan;
      Complex want = 0.0;
      for (int n = 0; n < 50; ++n) {
        auto s = make_spec({double(n), double(n)}, {1.0, 1.0}, 1);
        s.poly_log = {LogMonomial{1.0, {p, q}}};
        plan.terms.push_back({1.0, s});
        want += log_moment_kernel(1.0 + n, p, q);
      }
      const auto got = integrate_cube(plan, Part::Value, tight());
      CAPTURE(p);
      CAPTURE(q);
      CHECK(std::abs(got.value - want) < 1e-8);
    }
  }

  TEST_CASE("series mode for the unit-circle geometric factor") {
    // -sin(log xy)/((1-xy)log xy) with the sign read that matches its substitution twin
    auto s = make_spec({Complex(0, 1), Complex(0, 1)}, {1.0, 1.0}, 1);
    s.geometric = GeometricFactor{{1.0, 0.0}, {1.0, 1.0}};
    CubatureOptions o = tight();
    o.series_mode = SeriesMode::Force;
    const auto r = integrate_cube(plan_of(s), Part::Imag, o);
    CHECK(std::abs(r.value.real() + golden::cor1_coth) < 1e-8);
    CHECK(r.method.rfind("series", 0) == 0);
  }

  TEST_CASE("monotone refinement of the low-discrepancy estimate") {
    const auto s = make_spec({0.25, 0.0, 0.5}, {1.0, 2.0, 1.0}, 1);
    const double want = integrate_radial_simplex(to_orthant(s), Part::Value, tight()).value.real();
    CubatureOptions o;
    double first_err = 0.0, last_err = 0.0, prev_est = 1e300;
    for (int m = 8; m <= 16; m += 2) {
      o.qmc_points = 1LL << m;
      const auto r = integrate_low_discrepancy(to_orthant(s), Part::Value, o);
      CAPTURE(m);
      CHECK(r.error_estimate < prev_est);
      prev_est = r.error_estimate;
      const double err = std::abs(r.value.real() - want);
      if (m == 8) first_err = err;
      last_err = err;
    }
    CHECK(last_err < first_err);
    CHECK(last_err < 1e-5);
  }

  TEST_CASE("seeded runs are reproducible") {
    const auto s = make_spec({0.0, 0.0, 0.0, 0.0}, {1.0, 1.0, 1.0, 1.0}, 1);
    CubatureOptions o;
    o.qmc_points = 1 << 12;
    const auto a = integrate_low_discrepancy(to_orthant(s), Part::Value, o);
    const auto b = integrate_low_discrepancy(to_orthant(s), Part::Value, o);
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    o.seed = 7;
    const auto c = integrate_low_discrepancy(to_orthant(s), Part::Value, o);
    CHECK(c.value != a.value);
    CHECK(std::abs(c.value - a.value) < 1e-3);
    o.exec = Exec::Serial;
    const auto d = integrate_low_discrepancy(to_orthant(s), Part::Value, o);
    CHECK(d.value == c.value);
  }

  TEST_CASE("cube and orthant integrands agree pointwise") {
    auto s = make_spec({Complex(0.5, 1.0), Complex(0.0, -0.5)}, {1.0, 2.0}, 2, 0.5);
    s.poly_log = {LogMonomial{2.0, {1, 0}}, LogMonomial{-1.0, {0, 2}}};
    s.geometric = GeometricFactor{{0.5, 0.25}, {1.0, 2.0}};
    const OrthantForm f = to_orthant(s);
    for (double t1 : {0.01, 0.5, 3.0}) {
      for (double t2 : {0.2, 1.7}) {
        const double t[2] = {t1, t2};
        const double x[2] = {std::exp(-t1), std::exp(-t2)};
        const Complex cube = evaluate_cube(s, x) * x[0] * x[1];
        CHECK(std::abs(evaluate_orthant(f, t) - cube) <= 1e-13 * std::abs(cube));
      }
    }
  }

  TEST_CASE("dimension limits") {
    const auto s13 = make_spec(std::vector<Complex>(13, 0.0), std::vector<double>(13, 1.0), 1);
    CHECK_THROWS_AS(integrate_cube(s13), InvalidDim);
    const auto s5 = make_spec(std::vector<Complex>(5, 0.0), std::vector<double>(5, 1.0), 1);
    CHECK_THROWS_AS(integrate_cube_tensor(plan_of(s5), Part::Value, {}), InvalidDim);
    CubatureOptions o;
    o.max_evaluations = 50;
    CHECK_THROWS_AS(integrate_cube(make_spec({0.0, 0.0}, {1.0, 3.0}, 1), o), Nonconvergent);
  }

  TEST_CASE("routing") {
    CHECK(integrate_cube(make_spec({0.0}, {1.0}, 1, 1.0)).method == "tanh-sinh-1d");
    CHECK(integrate_cube(make_spec({0.0, 0.0}, {1.0, 0.5}, 1)).method == "radial-simplex");
    // a zero weight with j >= 1 rules out the radial map
    auto z = make_spec({0.0, 0.0}, {1.0, 0.0}, 1, 1.0);
    CubatureOptions o;
    o.qmc_points = 1 << 10;
    CHECK(integrate_cube(z, o).method == "low-discrepancy");
  }

  TEST_CASE("riemann limit sums") {
    const std::vector<double> ts{0.5, 0.25, 0.125, 0.0625};
    CHECK(std::abs(riemann_limit_sum([](double x) { return std::exp(-x); }, ts) - 1.0) < 1e-8);
    CHECK(std::abs(riemann_limit_sum([](double x) { return 1.0 / (1.0 + x * x); }, ts) - std::numbers::pi / 2) < 1e-7);
    CHECK_THROWS_AS(riemann_limit_sum([](double x) { return std::exp(-x); }, ts, 1e-12), Nonconvergent);
  }

  TEST_CASE("sum_points: serial and parallel are bit-identical") {
    auto f = [](long long i) { return PointEval{Complex(1.0 / (i + 1.0), std::sin(double(i))), 1, 1e-17 * i}; };
    const PointSum a = sum_points_serial(10007, f);
    const PointSum b = sum_points_parallel(10007, f);
    CHECK(a.value == b.value);
    CHECK(a.error == b.error);
    CHECK(a.evaluations == 10007);
    CHECK(sum_points(10007, f, Exec::Parallel).value == a.value);

    auto bad = [](long long i) -> PointEval {
      if (i == 37 || i == 900) throw Nonconvergent("point " + std::to_string(i));
      return {};
    };
    try {
      sum_points_parallel(1000, bad);
      FAIL("expected a throw");
    } catch (const Nonconvergent& e) {
      CHECK(std::string(e.what()) == "point 37");
    }
  }
}
