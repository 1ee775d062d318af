#include <cmath>

#include "doctest.h"
#include "squarint/errors.hpp"
#include "squarint/expr_core.hpp"
#include "squarint/sexpr.hpp"

using namespace squarint;

namespace {

LinearFactor lf(double a, double b, double c, int m = 1) { return {a, {b, c}, m}; }

bool has_field(const ValidationResult& r, const std::string& field) {
  for (const auto& v : r) {
    if (v.field.find(field) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("expr_core") {
  TEST_CASE("expression parse, render and evaluate") {
    const Expr e = Expr::parse("(* (/ 1 50) (log (/ 2187 512)))");
    CHECK(render(e) == "(* (/ 1 50) (log (/ 2187 512)))");
    CHECK(Expr::parse(render(e)) == e);
    CHECK(evaluate(e).real() == doctest::Approx(0.0290392279127452).epsilon(1e-15));
    CHECK(evaluate(e).imag() == 0.0);

    CHECK(evaluate(Expr::parse("euler_gamma")).real() == doctest::Approx(0.5772156649015329));
    CHECK(evaluate(Expr::parse("(- 1 euler_gamma)")).real() == doctest::Approx(0.4227843350984671));
    CHECK(std::abs(evaluate(Expr::parse("(* i i)")) + 1.0) < 1e-16);
    CHECK(evaluate(Expr::parse("(gamma 5)")).real() == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(evaluate(Expr::parse("(zeta 3)")).real() == doctest::Approx(1.2020569031595942));
    CHECK(evaluate(Expr::parse("(/ 1 n)"), {{"n", Complex(4.0, 0.0)}}).real() == 0.25);
  }

  TEST_CASE("expression errors") {
    CHECK_THROWS_AS(evaluate(Expr::parse("(nosuch 1)")), DomainError);
    CHECK_THROWS_AS(evaluate(Expr::parse("undefined_symbol")), DomainError);
    CHECK_THROWS_AS(evaluate(Expr::parse("(/ 1 0)")), DomainError);
    CHECK_THROWS_AS(evaluate(Expr::parse("(log 0)")), DomainError);
    CHECK_THROWS_AS(evaluate(Expr::parse("(neg 1 2)")), DomainError);
    CHECK_THROWS_AS(Expr::parse("(+ 1 2"), ParseError);
    CHECK_THROWS_AS(Expr::parse("(\"str\" 1)"), ParseError);
    CHECK(!known_functions().empty());
  }

  TEST_CASE("s-expression positions and shortest doubles") {
    try {
      parse_sexpr("(a b))");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }
    for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 4.4533471802741659e-07, 0.0}) {
      double back = 0.0;
      REQUIRE(parse_double(shortest(v), back));
      CHECK(back == v);
    }
    CHECK(shortest(0.1) == "0.1");
    double x = 0.0;
    CHECK_FALSE(parse_double("1.5x", x));
  }

  TEST_CASE("factor product validation") {
    FactorProduct ok{{lf(1, 1, 1), lf(2, 1, 1)}, {1.0}};
    CHECK(validate(ok).empty());
    CHECK(ok.denominator_degree() == 2);
    CHECK(ok.numerator_degree() == 0);

    FactorProduct low{{lf(1, 1, 1)}, {1.0}};
    CHECK(has_field(validate(low), "factors"));
    // the exponential weight relaxes the degree rule
    CHECK(validate(low, 1.0).empty());

    FactorProduct pole{{lf(1, -2, 0), lf(1, 1, 0)}, {1.0}};  // root at x = 2
    CHECK(has_field(validate(pole), "factors[0]"));

    FactorProduct proper{{lf(1, 1, 0), lf(1, 2, 0)}, {0.0, 1.0}};  // x/((x+1)(x+2)) diverges
    CHECK(has_field(validate(proper), "numerator"));

    FactorProduct zero_slope{{lf(0, 1, 0), lf(1, 1, 1)}, {1.0}};
    CHECK(has_field(validate(zero_slope), "factors[0]"));
    CHECK(!describe(validate(zero_slope)).empty());
  }

  TEST_CASE("canonicalize normalizes slopes and merges roots") {
    FactorProduct fp{{lf(2, 2, 2), lf(1, 1, 1), lf(1, 3, 0)}, {1.0}};
    const FactorProduct c = canonicalize(fp);
    REQUIRE(c.factors.size() == 2);
    for (const auto& f : c.factors) CHECK(f.slope == 1.0);
    // (2x+2+2i) = 2(x+1+i): merged with (x+1+i), scale 1/2 folded into the numerator
    CHECK(c.factors[1].multiplicity == 2);
    CHECK(c.numerator[0] == doctest::Approx(0.5));
    CHECK(c.factors[0].root().real() < c.factors[1].root().real());
    for (double x : {0.0, 0.7, 3.0}) CHECK(std::abs(evaluate(c, x) - evaluate(fp, x)) < 1e-15);
  }

  TEST_CASE("cube spec validation") {
    CubeIntegrandSpec s;
    s.dim = 2;
    s.exponents = {0.0, 0.0};
    s.log_weights = {1.0, 1.0};
    s.log_power = 1;
    CHECK(validate(s).empty());
    CHECK(s.conjugate_symmetric());

    auto bad = s;
    bad.exponents = {Complex(-1.0, 0.0), 0.0};
    CHECK(has_field(validate(bad), "exponents"));
    bad = s;
    bad.log_weights = {1.0};
    CHECK(has_field(validate(bad), "log_weights"));
    bad = s;
    bad.log_weights = {0.0, 0.0};
    CHECK(has_field(validate(bad), "log_weights"));
    bad = s;
    bad.geometric = GeometricFactor{{1.5, 0.0}, {1.0, 1.0}};
    CHECK(has_field(validate(bad), "geometric"));

    auto cplx = s;
    cplx.exponents = {Complex(0.0, 1.0), Complex(0.0, 1.0)};
    CHECK_FALSE(cplx.conjugate_symmetric());
  }

  TEST_CASE("series spec validation") {
    SeriesSpec lerch;
    lerch.family = SeriesFamily::Lerch;
    lerch.params = {{"z_re", 1.0}, {"z_im", 0.0}, {"s", 1.0}, {"a", 1.0}};
    CHECK(has_field(validate(lerch), "s"));
    lerch.params["s"] = 2.0;
    CHECK(validate(lerch).empty());
    lerch.params.erase("a");
    CHECK(has_field(validate(lerch), "params"));

    SeriesSpec custom;
    custom.family = SeriesFamily::CustomTerm;
    custom.params = {{"start", 1.0}};
    CHECK(has_field(validate(custom), "term"));
  }

  TEST_CASE("status classification") {
    CHECK(classify(1e-10, 1e-3, 1e-9, Trust::Asserted) == Status::Pass);
    CHECK(classify(1e-3, 1e-10, 1e-9, Trust::Asserted) == Status::Pass);
    CHECK(classify(1e-3, 1e-3, 1e-9, Trust::Asserted) == Status::Fail);
    CHECK(classify(1e-3, 1e-3, 1e-9, Trust::SuspectedTypo) == Status::Flagged);
    CHECK(to_string(Status::Flagged) == "FLAGGED");
  }

  TEST_CASE("enum spellings round-trip") {
    for (auto f : {SeriesFamily::Lerch, SeriesFamily::GeometricOfHalfline, SeriesFamily::EulerGamma,
                   SeriesFamily::AltLogProduct, SeriesFamily::PsiSum, SeriesFamily::ZetaOfIntegrals,
                   SeriesFamily::CustomTerm, SeriesFamily::ProductLimit}) {
      CHECK(series_family_from_string(to_string(f)) == f);
    }
    for (auto m : {CubeMethod::Auto, CubeMethod::RadialSimplex, CubeMethod::CubeTensor, CubeMethod::LowDiscrepancy,
                   CubeMethod::Series}) {
      CHECK(cube_method_from_string(to_string(m)) == m);
    }
    for (auto p : {Part::Value, Part::Real, Part::Imag}) CHECK(part_from_string(to_string(p)) == p);
    for (auto t : {Trust::Asserted, Trust::SuspectedTypo}) CHECK(trust_from_string(to_string(t)) == t);
    CHECK_FALSE(series_family_from_string("nope").has_value());
  }
}
