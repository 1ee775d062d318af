#include "squarint/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "squarint/sexpr.hpp"

namespace squarint {

Summary summarize(const std::vector<VerificationReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail:
        ++s.fail;
        s.failed.push_back(r.id);
        break;
      case Status::Flagged:
        ++s.flagged;
        s.flagged_ids.push_back(r.id);
        break;
    }
  }
  return s;
}

std::string format_sig(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string format_sig(Complex v) {
  if (v.imag() == 0.0) return format_sig(v.real());
  const std::string im = format_sig(std::abs(v.imag()));
  return format_sig(v.real()) + (v.imag() < 0 ? " - " : " + ") + im + "i";
}

EngineDiagnostics combined_engine(const VerificationReport& r) {
  EngineDiagnostics e;
  for (const auto& d : r.diagnostics) {
    if (!e.method.empty()) e.method += "; ";
    e.method += d.plan + ":" + d.method;
    e.evaluations += d.evaluations;
    e.error_estimate = std::max(e.error_estimate, d.error_estimate);
    e.truncation_index = std::max(e.truncation_index, d.truncation_index);
  }
  return e;
}

std::string json_escape(std::string_view s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out + "\"";
}

std::string json_number(double v) { return std::isfinite(v) ? shortest(v) : "null"; }

namespace {

std::string complex_json(Complex z) {
  return "{\"re\": " + json_number(z.real()) + ", \"im\": " + json_number(z.imag()) + "}";
}

std::string diag_json(const EngineDiagnostics& d, bool with_plan) {
  std::string out = "{";
  if (with_plan) out += "\"plan\": " + json_escape(d.plan) + ", ";
  out += "\"method\": " + json_escape(d.method) + ", \"evals\": " + std::to_string(d.evaluations) +
         ", \"estimate\": " + json_number(d.error_estimate);
  if (with_plan) out += ", \"truncation\": " + std::to_string(d.truncation_index);
  return out + "}";
}

}  // namespace

std::string report_json(const VerificationReport& r, const RunInfo& run, const Registry* registry) {
  std::string out = "{\"id\": " + json_escape(r.id);
  out += ", \"lhs\": " + complex_json(r.lhs_value);
  out += ", \"rhs\": " + complex_json(r.rhs_value);
  out += ", \"absError\": " + json_number(r.abs_error);
  out += ", \"relError\": " + json_number(r.rel_error);
  out += ", \"tolerance\": " + json_number(r.tolerance);
  out += ", \"status\": " + json_escape(to_string(r.status));
  out += ", \"trust\": " + json_escape(to_string(r.trust));
  out += ", \"engine\": " + diag_json(combined_engine(r), false);
  out += ", \"diagnostics\": [";
  for (std::size_t i = 0; i < r.diagnostics.size(); ++i) out += (i ? ", " : "") + diag_json(r.diagnostics[i], true);
  out += "]";
  out += ", \"seed\": " + std::to_string(run.seed);
  out += ", \"profile\": " + json_escape(to_string(run.profile));
  if (registry) {
    if (const IdentityRecord* rec = registry->lookup(r.id)) out += ", \"paperLocation\": " + json_escape(rec->paper_location);
  }
  if (!r.failure.empty()) out += ", \"failure\": " + json_escape(r.failure);
  return out + "}";
}

std::string render_json(const std::vector<VerificationReport>& reports, const RunInfo& run, const Registry* registry) {
  const Summary s = summarize(reports);
  std::string out = "{\n  \"registryVersion\": " + json_escape(run.registry_version);
  out += ",\n  \"profile\": " + json_escape(to_string(run.profile));
  out += ",\n  \"seed\": " + std::to_string(run.seed);
  out += ",\n  \"summary\": {\"pass\": " + std::to_string(s.pass) + ", \"fail\": " + std::to_string(s.fail) +
         ", \"flagged\": " + std::to_string(s.flagged) + "}";
  out += ",\n  \"reports\": [";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out += (i ? ",\n    " : "\n    ") + report_json(reports[i], run, registry);
  }
  out += reports.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string render_human(const std::vector<VerificationReport>& reports, const RunInfo& run, const Registry* registry) {
  std::string out;
  std::size_t w = 4;
  for (const auto& r : reports) w = std::max(w, r.id.size());
  for (const auto& r : reports) {
    std::string line = r.id + std::string(w - r.id.size() + 2, ' ') + to_string(r.status);
    line += std::string(9 - to_string(r.status).size(), ' ');
    if (!r.failure.empty()) {
      line += "error: " + r.failure;
    } else {
      line += "lhs " + format_sig(r.lhs_value) + "  rhs " + format_sig(r.rhs_value) + "  abs " + format_sig(r.abs_error) +
              "  tol " + format_sig(r.tolerance) + "  [" + combined_engine(r).method + "]";
    }
    out += line + "\n";
    if (r.status == Status::Flagged && registry) {
      if (const IdentityRecord* rec = registry->lookup(r.id)) out += std::string(w + 2, ' ') + "printed: " + rec->paper_location + "\n";
    }
  }
  const Summary s = summarize(reports);
  out += std::to_string(reports.size()) + " identities (" + to_string(run.profile) + ", seed " + std::to_string(run.seed) +
         "): " + std::to_string(s.pass) + " PASS, " + std::to_string(s.fail) + " FAIL, " + std::to_string(s.flagged) +
         " FLAGGED\n";
  return out;
}

}  // namespace squarint
