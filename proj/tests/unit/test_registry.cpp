#include <cmath>

#include "../oracles/golden.hpp"
#include "doctest.h"
#include "squarint/errors.hpp"
#include "squarint/registry.hpp"
#include "squarint/report.hpp"

using namespace squarint;

TEST_SUITE("identity_registry") {
  TEST_CASE("built-in catalog contents") {
    const Registry& reg = builtin_registry();
    CHECK(reg.size() >= 30);
    CHECK(reg.version() == kBuiltinRegistryVersion);
    const IdentityRecord* ex3 = reg.lookup("T1-EX3");
    REQUIRE(ex3);
    CHECK(ex3->tolerance == 1e-7);
    const IdentityRecord* sondow = reg.lookup("GAMMA-SONDOW");
    REQUIRE(sondow);
    REQUIRE(sondow->rhs.terms.size() == 1);
    const auto* c = std::get_if<ConstantPlan>(&sondow->rhs.terms[0].leaf);
    REQUIRE(c);
    CHECK(c->expr == Expr::sym("euler_gamma"));
    CHECK(reg.lookup("NOPE") == nullptr);
    CHECK(reg.select("T9-*").size() == 14);
    for (const auto* r : reg.select("T9-*")) CHECK(r->id.rfind("T9-", 0) == 0);
  }

  TEST_CASE("glob matching") {
    CHECK(glob_match("RAM-*-SIN", "RAM-1-K3-SIN"));
    CHECK(glob_match("RAM-*-SIN", "RAM-2-SIN"));
    CHECK_FALSE(glob_match("RAM-*-SIN", "RAM-2-A1"));
    CHECK(glob_match("T?-EX1", "T1-EX1"));
    CHECK_FALSE(glob_match("T?-EX1", "T99-EX1"));
    CHECK(glob_match("*", ""));
    CHECK(glob_match("a*b*c", "axxbyyc"));
  }

  TEST_CASE("registry construction rejects duplicates and invalid records") {
    auto recs = std::vector<IdentityRecord>{*builtin_registry().lookup("T1-EX1")};
    recs.push_back(recs.front());
    CHECK_THROWS_AS(Registry{recs}, DomainError);
    IdentityRecord bad = recs.front();
    bad.id = "BAD";
    bad.tolerance = 0.0;
    CHECK_THROWS_AS(Registry{{bad}}, DomainError);
    // a pole on the positive axis fails validation
    IdentityRecord pole = recs.front();
    pole.id = "POLE";
    pole.rhs = Plan{{PlanTerm{1.0, Part::Value, HalflinePlan{FactorProduct{{{1, {-1, 0}, 1}, {1, {1, 0}, 1}}, {1.0}}}}}};
    CHECK_THROWS_AS(Registry{{pole}}, DomainError);
  }

  TEST_CASE("verify examples") {
    const Registry& reg = builtin_registry();
    const auto ex1 = verify(reg, "T1-EX1");
    CHECK(ex1.status == Status::Pass);
    CHECK(std::abs(ex1.lhs_value.real() - 0.3465736) < 1e-6);
    CHECK(ex1.abs_error < 1e-6);

    const auto ex3 = verify(reg, "T2-EX3");
    CHECK(ex3.status == Status::Pass);
    for (const auto& d : ex3.diagnostics) CHECK(d.method.find("radial") == std::string::npos);
    CHECK(std::abs(ex3.lhs_value.real() - golden::t2_ex3) < 1e-14 * golden::t2_ex3);

    VerifyOptions thorough;
    thorough.profile = Profile::Thorough;
    const auto ex2 = verify(reg, "T1-EX2A", thorough);
    CHECK(ex2.status != Status::Fail);
    CHECK(ex2.tolerance == 1e-8);
    CHECK(std::abs(ex2.lhs_value.real() - golden::t1_ex2_re) < 1e-8);

    CHECK_THROWS_AS(verify(reg, "NOPE"), UnknownIdentity);
  }

  TEST_CASE("engine failures are wrapped with the originating plan") {
    IdentityRecord r = *builtin_registry().lookup("T1-EX1");
    r.id = "BROKEN";
    r.rhs = Plan{{PlanTerm{1.0, Part::Value, ConstantPlan{Expr::parse("(/ 1 0)")}}}};
    try {
      verify_record(r);
      FAIL("expected EngineFailure");
    } catch (const EngineFailure& e) {
      CHECK(e.plan() == "rhs");
      CHECK(e.cause_kind() == "DomainError");
    }
    const auto reports = verify_selected({&r});
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].status == Status::Fail);
    CHECK(reports[0].failure.find("DomainError in rhs") != std::string::npos);
    r.trust = Trust::SuspectedTypo;
    CHECK(verify_selected({&r})[0].status == Status::Flagged);
  }

  TEST_CASE("verify_all") {
    CHECK(verify_all(Registry{}).empty());
    const auto reports = verify_all(builtin_registry());
    REQUIRE(reports.size() == builtin_registry().size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& rec = builtin_registry().records()[i];
      CHECK(reports[i].id == rec.id);
      if (rec.trust == Trust::Asserted) {
        CAPTURE(rec.id);
        CHECK(reports[i].status == Status::Pass);
      } else {
        CHECK(reports[i].status != Status::Fail);
      }
    }
  }

  TEST_CASE("reports are deterministic and independent of the executor") {
    VerifyOptions par, ser;
    ser.exec = Exec::Serial;
    const RunInfo run{Profile::Quick, kDefaultSeed, kBuiltinRegistryVersion};
    const auto a = render_json(verify_all(builtin_registry(), par), run);
    const auto b = render_json(verify_all(builtin_registry(), par), run);
    const auto c = render_json(verify_all(builtin_registry(), ser), run);
    CHECK(a == b);
    CHECK(a == c);
  }

  TEST_CASE("budgets and profiles") {
    VerifyOptions o;
    CHECK(cubature_options(o).max_evaluations == 1'000'000);
    o.profile = Profile::Thorough;
    CHECK(cubature_options(o).qmc_points == 1 << 20);
    o.budget_evals = 1234;
    o.budget_points = 256;
    CHECK(cubature_options(o).max_evaluations == 1234);
    CHECK(cubature_options(o).qmc_points == 256);
    CHECK(profile_from_string("thorough") == Profile::Thorough);
    CHECK_FALSE(profile_from_string("slow").has_value());
    const IdentityRecord* closed = builtin_registry().lookup("T5-DIRICHLET");
    CHECK(effective_tolerance(*closed, Profile::Thorough) == closed->tolerance);
  }
}
