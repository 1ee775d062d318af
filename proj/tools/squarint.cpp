// squarint: list, verify and evaluate the unit-cube identities.
//
// Exit codes: 0 all selected asserted identities PASS, 1 some FAIL (or an
// engine error in `eval`), 2 usage or parse error, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "squarint/errors.hpp"
#include "squarint/halfline.hpp"
#include "squarint/registry.hpp"
#include "squarint/report.hpp"
#include "squarint/serialize.hpp"

using namespace squarint;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIO = 3;

struct IOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::vector<std::string> ids;
  std::string filter;
  std::string profile;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "human";
  std::string out;
  long long budget_evals = 0;
  long long budget_points = 0;
  std::string registry_file;
  bool serial = false;
};

Profile resolve_profile(const std::string& flag) {
  std::string name = flag;
  if (name.empty()) {
    const char* env = std::getenv("SQUARINT_PROFILE");
    name = env && *env ? env : "quick";
  }
  auto p = profile_from_string(name);
  if (!p) throw UsageError("unknown profile '" + name + "' (expected quick or thorough)");
  return *p;
}

VerifyOptions verify_options(const Config& c) {
  VerifyOptions v;
  v.profile = resolve_profile(c.profile);
  v.seed = c.seed;
  if (c.budget_evals < 0 || c.budget_points < 0) throw UsageError("budgets must be positive");
  if (c.budget_evals > 0) v.budget_evals = c.budget_evals;
  if (c.budget_points > 0) v.budget_points = c.budget_points;
  v.exec = c.serial ? Exec::Serial : Exec::Parallel;
  return v;
}

Registry load_registry(const Config& c) {
  if (c.registry_file.empty()) return builtin_registry();
  std::ifstream in(c.registry_file);
  if (!in) throw IOError("cannot read registry file '" + c.registry_file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return Registry(parse_registry_file(ss.str()), c.registry_file);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IOError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IOError("write to '" + path + "' failed");
}

void check_format(const std::string& f) {
  if (f != "human" && f != "json") throw UsageError("unknown format '" + f + "' (expected human or json)");
}

std::vector<const IdentityRecord*> selection(const Registry& reg, const Config& c) {
  std::vector<const IdentityRecord*> out;
  for (const auto& id : c.ids) {
    const IdentityRecord* r = reg.lookup(id);
    if (!r) throw UnknownIdentity("unknown identity '" + id + "'");
    out.push_back(r);
  }
  if (!c.filter.empty()) {
    for (const IdentityRecord* r : reg.select(c.filter)) {
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
  }
  if (c.ids.empty() && c.filter.empty()) {
    for (const auto& r : reg.records()) out.push_back(&r);
  }
  return out;
}

int cmd_list(const Config& c) {
  check_format(c.format);
  const Registry reg = load_registry(c);
  const auto recs = c.filter.empty() ? reg.select("*") : reg.select(c.filter);
  std::string text;
  if (c.format == "json") {
    text = "[";
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const auto* r = recs[i];
      text += std::string(i ? ",\n " : "\n ") + "{\"id\": " + json_escape(r->id) +
              ", \"paperLocation\": " + json_escape(r->paper_location) + ", \"trust\": " + json_escape(to_string(r->trust)) +
              ", \"tolerance\": " + json_number(r->tolerance) + "}";
    }
    text += recs.empty() ? "]\n" : "\n]\n";
  } else {
    std::size_t w = 2;
    for (const auto* r : recs) w = std::max(w, r->id.size());
    for (const auto* r : recs) {
      const std::string trust = to_string(r->trust);
      text += r->id + std::string(w - r->id.size() + 2, ' ') + trust + std::string(16 - trust.size(), ' ') +
              format_sig(r->tolerance) + std::string(8 - std::min<std::size_t>(7, format_sig(r->tolerance).size()), ' ') +
              r->paper_location + "\n";
    }
  }
  emit(text, c.out);
  return 0;
}

int cmd_verify(const Config& c) {
  check_format(c.format);
  const VerifyOptions opt = verify_options(c);
  const Registry reg = load_registry(c);
  const auto recs = selection(reg, c);
  const auto reports = verify_selected(recs, opt);
  const RunInfo run{opt.profile, opt.seed, reg.version()};
  emit(c.format == "json" ? render_json(reports, run, &reg) : render_human(reports, run, &reg), c.out);
  for (const auto& r : reports) {
    if (r.status == Status::Fail && r.trust == Trust::Asserted) return kExitFail;
  }
  return 0;
}

int cmd_eval(const Config& c, const std::string& kind, const std::string& literal) {
  check_format(c.format);
  const VerifyOptions opt = verify_options(c);
  QuadratureResult q;
  if (kind == "halfline") {
    const HalflineLiteral h = parse_halfline_literal(literal);
    Complex v = integrate_rational_exp(h.plan.product, h.plan.exp_weight);
    if (h.part == Part::Real) v = {v.real(), 0.0};
    if (h.part == Part::Imag) v = {v.imag(), 0.0};
    q = {v, 0.0, 1, h.plan.exp_weight > 0.0 ? "halfline-exp-integral" : "halfline-partial-fractions"};
  } else if (kind == "cube") {
    const CubeLiteral cl = parse_cube_literal(literal);
    q = integrate_cube(cl.plan, cl.part, cubature_options(opt));
  } else {
    throw UsageError("eval kind must be halfline or cube");
  }
  std::string text;
  if (c.format == "json") {
    text = "{\"kind\": " + json_escape(kind) + ", \"value\": {\"re\": " + json_number(q.value.real()) +
           ", \"im\": " + json_number(q.value.imag()) + "}, \"estimate\": " + json_number(q.error_estimate) +
           ", \"evals\": " + std::to_string(q.evaluations) + ", \"method\": " + json_escape(q.method) + "}\n";
  } else {
    text = "value     " + format_sig(q.value) + "\n" + "re        " + format_sig(q.value.real()) + "\n" +
           "im        " + format_sig(q.value.imag()) + "\n" + "estimate  " + format_sig(q.error_estimate) + "\n" +
           "evals     " + std::to_string(q.evaluations) + "\n" + "method    " + q.method + "\n";
  }
  emit(text, c.out);
  return 0;
}

int cmd_dump(const Config& c) {
  const Registry reg = load_registry(c);
  emit(write_registry_file(reg.records()), c.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification engine for unit-cube integral identities"};
  app.require_subcommand(1);
  Config cfg;
  std::string eval_kind, eval_literal;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "human | json");
    sub->add_option("--out", cfg.out, "write output to this file");
    sub->add_option("--registry", cfg.registry_file, "registry file instead of the built-in catalog");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--profile", cfg.profile, "quick | thorough (default: $SQUARINT_PROFILE or quick)");
    sub->add_option("--seed", cfg.seed, "seed for the low-discrepancy shifts");
    sub->add_option("--budget-evals", cfg.budget_evals, "cubature evaluation budget");
    sub->add_option("--budget-points", cfg.budget_points, "low-discrepancy points per shift");
    sub->add_flag("--serial", cfg.serial, "run cubature kernels on one thread");
  };

  CLI::App* list = app.add_subcommand("list", "list identities");
  list->add_option("--filter", cfg.filter, "glob over identity ids");
  add_common(list);

  CLI::App* verify = app.add_subcommand("verify", "verify identities");
  verify->add_option("--id", cfg.ids, "identity id (repeatable)");
  verify->add_option("--filter", cfg.filter, "glob over identity ids");
  add_common(verify);
  add_budget(verify);

  CLI::App* eval = app.add_subcommand("eval", "evaluate an ad-hoc integral");
  eval->add_option("kind", eval_kind, "halfline | cube")->required();
  eval->add_option("spec", eval_literal, "integrand literal")->required();
  add_common(eval);
  add_budget(eval);

  CLI::App* dump = app.add_subcommand("dump", "write the registry in file format");
  add_common(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*list) return cmd_list(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*eval) return cmd_eval(cfg, eval_kind, eval_literal);
    if (*dump) return cmd_dump(cfg);
  } catch (const IOError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIO;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownIdentity& e) {
    std::cerr << "UnknownIdentity: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
