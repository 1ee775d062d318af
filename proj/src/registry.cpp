#include "squarint/registry.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "squarint/errors.hpp"
#include "squarint/halfline.hpp"
#include "squarint/series.hpp"

namespace squarint {

std::string to_string(Profile p) { return p == Profile::Quick ? "quick" : "thorough"; }

std::optional<Profile> profile_from_string(std::string_view s) {
  if (s == "quick") return Profile::Quick;
  if (s == "thorough") return Profile::Thorough;
  return std::nullopt;
}

CubatureOptions cubature_options(const VerifyOptions& opt) {
  CubatureOptions c;
  if (opt.profile == Profile::Quick) {
    c.tolerance = 1e-9;
    c.max_evaluations = 1'000'000;
    c.qmc_points = 1 << 16;
  } else {
    c.tolerance = 1e-11;
    c.max_evaluations = 10'000'000;
    c.qmc_points = 1 << 20;
  }
  if (opt.budget_evals) c.max_evaluations = *opt.budget_evals;
  if (opt.budget_points) c.qmc_points = *opt.budget_points;
  c.seed = opt.seed;
  c.exec = opt.exec;
  return c;
}

bool quadrature_backed(const IdentityRecord& r) {
  for (const Plan* p : {&r.lhs, &r.rhs}) {
    for (const auto& t : p->terms) {
      if (std::holds_alternative<CubePlan>(t.leaf)) return true;
    }
  }
  return false;
}

double effective_tolerance(const IdentityRecord& r, Profile p) {
  if (p == Profile::Thorough && quadrature_backed(r)) return std::min(r.tolerance, 1e-8);
  return r.tolerance;
}

namespace {

Complex apply_part(Complex v, Part p) {
  switch (p) {
    case Part::Real: return {v.real(), 0.0};
    case Part::Imag: return {v.imag(), 0.0};
    case Part::Value: break;
  }
  return v;
}

EngineDiagnostics evaluate_leaf(const PlanLeaf& leaf, Part part, const VerifyOptions& opt, Complex& out) {
  EngineDiagnostics d;
  std::visit(
      [&](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, HalflinePlan>) {
          out = apply_part(integrate_rational_exp(l.product, l.exp_weight), part);
          d.method = l.exp_weight > 0.0 ? "halfline-exp-integral" : "halfline-partial-fractions";
          d.evaluations = 1;
        } else if constexpr (std::is_same_v<T, CubePlan>) {
          const QuadratureResult q = integrate_cube(l, part, cubature_options(opt));
          out = q.value;
          d.method = q.method;
          d.evaluations = q.evaluations;
          d.error_estimate = q.error_estimate;
        } else if constexpr (std::is_same_v<T, SeriesPlan>) {
          const SeriesEval s = evaluate_series(l.spec);
          out = apply_part(s.value, part);
          d.method = "series/" + to_string(l.spec.family) + "/" + s.method;
          d.evaluations = s.terms_used;
          d.error_estimate = s.error_estimate;
          d.truncation_index = s.terms_used;
        } else {
          out = apply_part(evaluate(l.expr), part);
          d.method = "constant";
          d.evaluations = 1;
        }
      },
      leaf);
  return d;
}

double relative_error(Complex lhs, Complex rhs) {
  const double a = std::abs(lhs - rhs);
  const double scale = std::abs(rhs);
  if (scale > 0.0) return a / scale;
  return a == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace

PlanValue evaluate_plan(const Plan& plan, const std::string& side, const VerifyOptions& opt) {
  PlanValue pv;
  for (const auto& t : plan.terms) {
    Complex v;
    EngineDiagnostics d = evaluate_leaf(t.leaf, t.part, opt, v);
    d.plan = side;
    d.error_estimate *= std::abs(t.coeff);
    pv.value += t.coeff * v;
    pv.diagnostics.push_back(std::move(d));
  }
  return pv;
}

bool glob_match(std::string_view pattern, std::string_view text) {
  // iterative matcher with single-star backtracking
  std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

Registry::Registry(std::vector<IdentityRecord> records, std::string version)
    : records_(std::move(records)), version_(std::move(version)) {
  std::set<std::string, std::less<>> seen;
  for (const auto& r : records_) {
    if (!seen.insert(r.id).second) throw DomainError("duplicate identity id '" + r.id + "'");
    if (auto v = validate(r); !v.empty()) throw DomainError("identity '" + r.id + "' is invalid: " + describe(v));
  }
}

const IdentityRecord* Registry::lookup(std::string_view id) const {
  for (const auto& r : records_) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::vector<const IdentityRecord*> Registry::select(std::string_view glob) const {
  std::vector<const IdentityRecord*> out;
  for (const auto& r : records_) {
    if (glob_match(glob, r.id)) out.push_back(&r);
  }
  return out;
}

VerificationReport verify_record(const IdentityRecord& r, const VerifyOptions& opt) {
  VerificationReport rep;
  rep.id = r.id;
  rep.trust = r.trust;
  rep.tolerance = effective_tolerance(r, opt.profile);
  PlanValue lhs, rhs;
  try {
    lhs = evaluate_plan(r.lhs, "lhs", opt);
  } catch (const Error& e) {
    throw EngineFailure(e, "lhs");
  }
  try {
    rhs = evaluate_plan(r.rhs, "rhs", opt);
  } catch (const Error& e) {
    throw EngineFailure(e, "rhs");
  }
  rep.lhs_value = lhs.value;
  rep.rhs_value = rhs.value;
  rep.abs_error = std::abs(lhs.value - rhs.value);
  rep.rel_error = relative_error(lhs.value, rhs.value);
  rep.diagnostics = std::move(lhs.diagnostics);
  rep.diagnostics.insert(rep.diagnostics.end(), rhs.diagnostics.begin(), rhs.diagnostics.end());
  rep.status = classify(rep.abs_error, rep.rel_error, rep.tolerance, r.trust);
  return rep;
}

VerificationReport verify(const Registry& reg, std::string_view id, const VerifyOptions& opt) {
  const IdentityRecord* r = reg.lookup(id);
  if (!r) throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
  return verify_record(*r, opt);
}

std::vector<VerificationReport> verify_selected(const std::vector<const IdentityRecord*>& records,
                                                const VerifyOptions& opt) {
  std::vector<VerificationReport> out;
  out.reserve(records.size());
  for (const IdentityRecord* r : records) {
    try {
      out.push_back(verify_record(*r, opt));
    } catch (const EngineFailure& e) {
      VerificationReport rep;
      rep.id = r->id;
      rep.trust = r->trust;
      rep.tolerance = effective_tolerance(*r, opt.profile);
      rep.abs_error = std::numeric_limits<double>::infinity();
      rep.rel_error = std::numeric_limits<double>::infinity();
      rep.status = r->trust == Trust::SuspectedTypo ? Status::Flagged : Status::Fail;
      rep.failure = e.what();
      out.push_back(std::move(rep));
    }
  }
  return out;
}

std::vector<VerificationReport> verify_all(const Registry& reg, const VerifyOptions& opt) {
  std::vector<const IdentityRecord*> all;
  for (const auto& r : reg.records()) all.push_back(&r);
  return verify_selected(all, opt);
}

}  // namespace squarint
