#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "squarint/cubature.hpp"
#include "squarint/expr_core.hpp"

namespace squarint {

enum class Profile { Quick, Thorough };
std::string to_string(Profile p);
std::optional<Profile> profile_from_string(std::string_view s);

struct VerifyOptions {
  Profile profile = Profile::Quick;
  std::uint64_t seed = kDefaultSeed;
  std::optional<long long> budget_evals;   // overrides the profile's cubature budget
  std::optional<long long> budget_points;  // low-discrepancy points per shift
  Exec exec = Exec::Parallel;
};

/// quick: target 1e-9, 1e6 evaluations, 2^16 points per shift;
/// thorough: target 1e-11, 1e7 evaluations, 2^20 points per shift.
CubatureOptions cubature_options(const VerifyOptions& opt);

/// The record's tolerance, tightened to 1e-8 in thorough mode when either
/// side is quadrature-backed.
double effective_tolerance(const IdentityRecord& r, Profile p);
bool quadrature_backed(const IdentityRecord& r);

struct PlanValue {
  Complex value{};
  std::vector<EngineDiagnostics> diagnostics;  // one per leaf
};

/// Evaluates Σ coeff·part(leaf). Engine errors propagate unwrapped.
PlanValue evaluate_plan(const Plan& plan, const std::string& side, const VerifyOptions& opt = {});

/// Shell-style glob with '*' and '?'.
bool glob_match(std::string_view pattern, std::string_view text);

class Registry {
 public:
  Registry() = default;
  /// Throws DomainError on duplicate ids or records failing validation.
  explicit Registry(std::vector<IdentityRecord> records, std::string version = "user");

  const std::vector<IdentityRecord>& records() const { return records_; }
  const std::string& version() const { return version_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  const IdentityRecord* lookup(std::string_view id) const;
  /// Records whose id matches the glob, in registry order.
  std::vector<const IdentityRecord*> select(std::string_view glob) const;

 private:
  std::vector<IdentityRecord> records_;
  std::string version_;
};

inline constexpr const char* kBuiltinRegistryVersion = "builtin-2";

const Registry& builtin_registry();

/// Throws EngineFailure (cause plus "lhs"/"rhs") when a side cannot be evaluated.
VerificationReport verify_record(const IdentityRecord& r, const VerifyOptions& opt = {});
/// Throws UnknownIdentity for ids not in the registry.
VerificationReport verify(const Registry& reg, std::string_view id, const VerifyOptions& opt = {});
/// Registry order; engine failures are captured in the report (status FAIL,
/// or FLAGGED for suspected-typo records) instead of propagating.
std::vector<VerificationReport> verify_all(const Registry& reg, const VerifyOptions& opt = {});
std::vector<VerificationReport> verify_selected(const std::vector<const IdentityRecord*>& records,
                                                const VerifyOptions& opt = {});

}  // namespace squarint
