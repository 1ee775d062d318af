#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "squarint/registry.hpp"

namespace squarint {

struct RunInfo {
  Profile profile = Profile::Quick;
  std::uint64_t seed = kDefaultSeed;
  std::string registry_version;
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int flagged = 0;
  std::vector<std::string> failed;
  std::vector<std::string> flagged_ids;
};

Summary summarize(const std::vector<VerificationReport>& reports);

/// 9 significant digits; complex values print as "a + bi" when b ≠ 0.
std::string format_sig(double v);
std::string format_sig(Complex v);

/// Combined engine block of a report: methods joined with "; ", evaluations
/// summed, largest error estimate.
EngineDiagnostics combined_engine(const VerificationReport& r);

/// One JSON object per report (doubles as shortest round-trip decimals;
/// non-finite values as null). `registry` supplies paperLocation when given.
std::string report_json(const VerificationReport& r, const RunInfo& run, const Registry* registry = nullptr);
/// {"registryVersion", "profile", "seed", "summary", "reports": [...]}
std::string render_json(const std::vector<VerificationReport>& reports, const RunInfo& run,
                        const Registry* registry = nullptr);
std::string render_human(const std::vector<VerificationReport>& reports, const RunInfo& run,
                         const Registry* registry = nullptr);

std::string json_escape(std::string_view s);
std::string json_number(double v);

}  // namespace squarint
