#include "hompoisson/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "hompoisson/catalog.hpp"
#include "hompoisson/constructions.hpp"
#include "hompoisson/error.hpp"
#include "hompoisson/hom_power.hpp"
#include "hompoisson/report.hpp"
#include "hompoisson/spec_file.hpp"
#include "hompoisson/witnesses.hpp"

namespace hompoisson {

namespace {

/// Everything a command reports. Passes when every report passes and the
/// command's own claim (`claim_holds`) is certified.
struct Outcome {
  std::string command;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<CheckReport> reports;
  std::vector<std::string> basis;
  bool claim_holds = true;

  bool passed() const {
    return claim_holds && std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  }
};

/// Thrown for bad arguments discovered after CLI11 parsing.
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string format = "text";
  std::string output;
  std::string spec;
  std::string spec2;
  std::string map;
  std::string name;
  std::string suite = "auto";
  std::vector<std::string> params;
  unsigned max_n = 6;
  bool force = false;
  bool multiplicative = false;
};

CatalogParams parse_params(const std::vector<std::string>& raw) {
  CatalogParams params;
  for (const auto& item : raw) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    if (params.count(key)) throw UsageError("parameter '" + key + "' given twice");
    try {
      params.emplace(key, parse_rational(item.substr(eq + 1)));
    } catch (const ParseError&) {
      throw UsageError("parameter '" + key + "' is not an exact rational: '" + item.substr(eq + 1) + "'");
    }
  }
  return params;
}

void write_output(const Options& o, const HomPoissonAlgebra& a) {
  if (!o.output.empty()) emit_spec(a, o.output);
}

void write_output(const Options& o, const HomAlgebra& a) {
  if (!o.output.empty()) emit_spec(a, o.output);
}

Outcome cmd_check(const Options& o) {
  const AlgebraSpec spec = parse_spec(o.spec);
  Outcome out{"check", {}, {}, spec.algebra.basis(), true};
  out.values.emplace_back("dim", std::to_string(spec.algebra.dim()));
  std::string suite = o.suite;
  if (suite == "auto") suite = spec.kind == SpecKind::poisson ? "hom-poisson" : "admissible";
  if (suite == "hom-poisson") {
    if (spec.kind != SpecKind::poisson) throw UsageError("suite hom-poisson needs a poisson-kind spec");
    out.reports.push_back(check_hom_poisson(spec.algebra));
  } else if (suite == "admissible") {
    const HomAlgebra a = spec.product_algebra();
    out.reports.push_back(check_admissible(a));
    out.reports.push_back(check_hom_flexible(a));
  } else {
    out.reports.push_back(check_hom_associative(spec.product_algebra()));
  }
  if (o.multiplicative) out.reports.push_back(check_multiplicative(spec.algebra));
  return out;
}

Outcome cmd_twist(const Options& o) {
  const AlgebraSpec spec = parse_spec(o.spec);
  if (spec.kind != SpecKind::poisson) throw UsageError("twist needs a poisson-kind spec");
  const LinearMap beta = parse_map(o.map);
  if (beta.dim() != spec.algebra.dim()) {
    throw UsageError("map dimension " + std::to_string(beta.dim()) + " does not match algebra dimension " +
                     std::to_string(spec.algebra.dim()));
  }
  Outcome out{"twist", {}, {}, spec.algebra.basis(), true};
  if (!o.force) {
    CheckReport morphism = check_morphism(beta, spec.algebra, spec.algebra, true);
    if (!morphism.passed) {
      out.reports.push_back(std::move(morphism));
      return out;
    }
  }
  const HomPoissonAlgebra result = twist(spec.algebra, beta, TwistOptions{true});
  out.reports.push_back(check_hom_poisson(result));
  if (o.multiplicative) out.reports.push_back(check_multiplicative(result));
  write_output(o, result);
  return out;
}

Outcome cmd_tensor(const Options& o) {
  const AlgebraSpec a = parse_spec(o.spec);
  const AlgebraSpec b = parse_spec(o.spec2);
  if (a.kind != SpecKind::poisson || b.kind != SpecKind::poisson) throw UsageError("tensor needs poisson-kind specs");
  Outcome out{"tensor", {}, {}, {}, true};
  CheckReport ca = check_commutative(a.algebra.mu(), "commutativity[first]");
  CheckReport cb = check_commutative(b.algebra.mu(), "commutativity[second]");
  if (!ca.passed || !cb.passed) {
    out.reports.push_back(std::move(ca));
    out.reports.push_back(std::move(cb));
    return out;
  }
  const HomPoissonAlgebra result = tensor(a.algebra, b.algebra);
  out.basis = result.basis();
  out.values.emplace_back("dim", std::to_string(result.dim()));
  out.reports.push_back(check_hom_poisson(result));
  if (o.multiplicative) out.reports.push_back(check_multiplicative(result));
  write_output(o, result);
  return out;
}

Outcome cmd_polarize(const Options& o) {
  const AlgebraSpec spec = parse_spec(o.spec);
  const HomAlgebra a = spec.product_algebra();
  const HomPoissonAlgebra result = polarize(a);
  Outcome out{"polarize", {}, {}, a.basis(), true};
  out.reports.push_back(check_admissible(a));
  out.reports.push_back(check_hom_poisson(result));
  write_output(o, result);
  return out;
}

Outcome cmd_depolarize(const Options& o) {
  const AlgebraSpec spec = parse_spec(o.spec);
  if (spec.kind != SpecKind::poisson) throw UsageError("depolarize needs a poisson-kind spec");
  const HomAlgebra result = depolarize(spec.algebra);
  Outcome out{"depolarize", {}, {}, result.basis(), true};
  out.reports.push_back(check_hom_poisson(spec.algebra));
  out.reports.push_back(check_admissible(result));
  write_output(o, result);
  return out;
}

Outcome cmd_power(const Options& o) {
  const AlgebraSpec spec = parse_spec(o.spec);
  if (o.max_n < 2) throw UsageError("--max-n must be at least 2");
  const HomAlgebra a = spec.product_algebra();
  Outcome out{"power", {}, {}, a.basis(), true};
  for (unsigned n = 2; n <= o.max_n; ++n) out.reports.push_back(check_nth_power_assoc(a, n));
  if (check_multiplicative(a).passed) {
    out.reports.push_back(check_criterion_34(a));
  } else {
    out.values.emplace_back("criterion-34", "skipped (not multiplicative)");
  }
  return out;
}

Outcome cmd_catalog(const Options& o) {
  Outcome out{"catalog", {}, {}, {}, true};
  if (o.name.empty()) {
    if (!o.params.empty() || !o.output.empty()) throw UsageError("catalog listing takes no --param or -o");
    for (const auto& entry : catalog_entries()) {
      std::string params;
      for (const auto& p : entry.params) params += (params.empty() ? "" : ", ") + p.name + "=" + to_string(p.default_value);
      out.values.emplace_back(entry.name, entry.description + (params.empty() ? "" : " [" + params + "]"));
    }
    return out;
  }
  const CatalogParams params = parse_params(o.params);
  auto build = [&]() -> CatalogObject {
    try {
      return build_catalog(o.name, params);
    } catch (const PreconditionFailed&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  };
  const CatalogObject obj = build();
  out.values.emplace_back("name", o.name);
  if (const auto* a = std::get_if<HomPoissonAlgebra>(&obj)) {
    out.basis = a->basis();
    out.values.emplace_back("dim", std::to_string(a->dim()));
    out.reports.push_back(check_hom_poisson(*a));
    write_output(o, *a);
    return out;
  }
  if (!o.output.empty()) throw UsageError("catalog entry '" + o.name + "' is infinite-dimensional; -o is not available");
  if (const auto* s = std::get_if<SymplecticStructure>(&obj)) {
    out.values.emplace_back("generators", std::to_string(s->generators().size()));
    out.reports.push_back(check_symplectic_substitution(*s, Substitution::identity(s->generators())));
  } else if (const auto* l = std::get_if<LiePoissonStructure>(&obj)) {
    out.values.emplace_back("generators", std::to_string(l->size()));
  } else if (const auto* f = std::get_if<FreePolynomialExample>(&obj)) {
    out.values.emplace_back("alpha(X)", to_string(f->alpha.images().front()));
  }
  return out;
}

Outcome cmd_witness(const Options& o) {
  const CatalogParams params = parse_params(o.params);
  ReplayResult r;
  try {
    r = run_witness(o.name, params);
  } catch (const PreconditionFailed&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  Outcome out{"witness " + r.name, std::move(r.values), std::move(r.reports), std::move(r.basis), r.passed};
  return out;
}

void print_text(std::ostream& os, const Outcome& o) {
  os << o.command << '\n';
  for (const auto& [k, v] : o.values) os << "  " << k << ": " << v << '\n';
  for (const auto& r : o.reports) print_report(os, r, o.basis, 1);
  os << (o.passed() ? "PASS" : "FAIL") << '\n';
}

void print_json(std::ostream& os, const Outcome& o) {
  nlohmann::ordered_json j;
  j["command"] = o.command;
  j["passed"] = o.passed();
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (const auto& [k, v] : o.values) values[k] = v;
  j["values"] = values;
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : o.reports) j["reports"].push_back(report_to_json(r, o.basis));
  os << j.dump(2) << '\n';
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification of Hom-Poisson algebras", "hompoisson"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "Run the identity suite on a spec file");
  check->add_option("spec", o.spec, "Algebra spec file")->required();
  check->add_option("--suite", o.suite, "auto, hom-poisson, admissible or hom-associative")
      ->check(CLI::IsMember({"auto", "hom-poisson", "admissible", "hom-associative"}));
  check->add_flag("--multiplicative", o.multiplicative, "Also check alpha is multiplicative");

  auto* twist_cmd = app.add_subcommand("twist", "Twist a Hom-Poisson algebra by a weak morphism");
  twist_cmd->add_option("spec", o.spec, "Algebra spec file")->required();
  twist_cmd->add_option("--by", o.map, "Map file")->required();
  twist_cmd->add_flag("--force", o.force, "Skip the weak-morphism precondition");
  twist_cmd->add_flag("--multiplicative", o.multiplicative, "Also check the result is multiplicative");
  twist_cmd->add_option("-o,--output", o.output, "Write the result spec");

  auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product of two Hom-Poisson algebras");
  tensor_cmd->add_option("a", o.spec, "First spec file")->required();
  tensor_cmd->add_option("b", o.spec2, "Second spec file")->required();
  tensor_cmd->add_flag("--multiplicative", o.multiplicative, "Also check the result is multiplicative");
  tensor_cmd->add_option("-o,--output", o.output, "Write the result spec");

  auto* polarize_cmd = app.add_subcommand("polarize", "Polarize a Hom-algebra");
  polarize_cmd->add_option("spec", o.spec, "Algebra spec file")->required();
  polarize_cmd->add_option("-o,--output", o.output, "Write the result spec");

  auto* depolarize_cmd = app.add_subcommand("depolarize", "Depolarize a Hom-Poisson algebra");
  depolarize_cmd->add_option("spec", o.spec, "Algebra spec file")->required();
  depolarize_cmd->add_option("-o,--output", o.output, "Write the result spec");

  auto* power_cmd = app.add_subcommand("power", "Hom-power associativity up to --max-n");
  power_cmd->add_option("spec", o.spec, "Algebra spec file")->required();
  power_cmd->add_option("--max-n", o.max_n, "Largest n")->check(CLI::Range(2u, kMaxPowerDegree));

  auto* catalog_cmd = app.add_subcommand("catalog", "Build a catalog example, or list them");
  catalog_cmd->add_option("name", o.name, "Catalog entry");
  catalog_cmd->add_option("--param", o.params, "Parameter key=value")->allow_extra_args(false);
  catalog_cmd->add_option("-o,--output", o.output, "Write the result spec");

  auto* witness_cmd = app.add_subcommand("witness", "Replay one of the worked examples");
  witness_cmd->add_option("name", o.name, "free-poly, matrix, sl2, r2n or heisenberg")->required();
  witness_cmd->add_option("--param", o.params, "Parameter key=value")->allow_extra_args(false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Outcome outcome;
  try {
    if (check->parsed()) {
      outcome = cmd_check(o);
    } else if (twist_cmd->parsed()) {
      outcome = cmd_twist(o);
    } else if (tensor_cmd->parsed()) {
      outcome = cmd_tensor(o);
    } else if (polarize_cmd->parsed()) {
      outcome = cmd_polarize(o);
    } else if (depolarize_cmd->parsed()) {
      outcome = cmd_depolarize(o);
    } else if (power_cmd->parsed()) {
      outcome = cmd_power(o);
    } else if (catalog_cmd->parsed()) {
      outcome = cmd_catalog(o);
    } else {
      outcome = cmd_witness(o);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.format == "json") {
    print_json(out, outcome);
  } else {
    print_text(out, outcome);
  }
  return outcome.passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace hompoisson
