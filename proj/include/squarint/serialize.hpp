#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "squarint/expr_core.hpp"
#include "squarint/sexpr.hpp"

namespace squarint {

// Registry file format (grammar in docs/registry-format.md). Every double is
// written as its shortest round-trip decimal, so write → parse → write is
// bit-exact.

std::string write_plan(const Plan& plan);
Plan parse_plan(const SExpr& e);

/// One record on one line, no trailing newline.
std::string write_record(const IdentityRecord& r);
IdentityRecord parse_record(std::string_view line);

/// Line-delimited file: one record per line; blank lines and lines starting
/// with ';' are skipped. ParseError messages carry the line number.
std::string write_registry_file(const std::vector<IdentityRecord>& records);
std::vector<IdentityRecord> parse_registry_file(std::string_view text);

// ---------------------------------------------------------------------------
// Ad-hoc literals for `squarint eval`.

/// "1", "-2.5", "3i", "1+1i", "0.5-2e-3i".
Complex parse_complex_literal(std::string_view s);

struct HalflineLiteral {
  HalflinePlan plan;
  Part part = Part::Value;
};

/// "(a,b,c)(a,b,c)^m; num=c0,c1,...; m=weight; part=re|im"
/// Each (a,b,c) is the factor a·x + b + c·i, optionally raised to ^mult.
HalflineLiteral parse_halfline_literal(std::string_view s);

struct CubeLiteral {
  CubePlan plan;
  Part part = Part::Value;
};

/// "k=2; mu=0,0; logw=1,1; j=1; m=0; geo=z@e1,e2; poly=c:p1,p2|c:p1,p2;
///  terms=c@mu1,mu2|c@mu1,mu2; part=re|im; method=auto|radial-simplex|..."
/// Only k is required; mu defaults to 0, logw to 1, j and m to 0. `terms`
/// replaces `mu` with several jointly integrated terms.
CubeLiteral parse_cube_literal(std::string_view s);

}  // namespace squarint
