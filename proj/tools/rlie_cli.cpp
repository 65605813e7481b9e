// Command-line surface: parse algebra documents, run validation / analysis /
// enveloping-algebra inspection / PIR decisions / audits, and emit reports.
//
// Exit codes: 0 success (including a "no" verdict), 1 input or validation
// error, 2 cap or budget exceeded, 3 internal assertion or audit
// disagreement.

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "rlie/catalog.hpp"
#include "rlie/criterion.hpp"
#include "rlie/errors.hpp"
#include "rlie/io.hpp"
#include "rlie/uenv.hpp"

namespace {

using rlie::Caps;
using rlie::criterion::PirVerdict;
using rlie::gfp::Subspace;
using rlie::gfp::Vec;
using rlie::io::json;
using rlie::rla::LieAlgebra;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCap = 2;
constexpr int kExitInternal = 3;

struct Options {
  Caps caps;
  bool json_out = false;
  std::string file;
  std::string method = "both";
  int p = 2;
  int dim = 1;
  bool exhaustive = false;
  int sample = 0;
  uint64_t seed = 0;
  std::string kind;
  int a = 1, b = 1;
};

void print_report(const json& report, bool as_json) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  // Human-readable rendering: flat key/value walk.
  std::function<void(const json&, std::string)> walk = [&](const json& node, std::string prefix) {
    if (node.is_object()) {
      for (const auto& [k, v] : node.items()) walk(v, prefix.empty() ? k : prefix + "." + k);
    } else if (node.is_array() && !node.empty() && (node[0].is_object() || node[0].is_array())) {
      int i = 0;
      for (const auto& v : node) walk(v, prefix + "[" + std::to_string(i++) + "]");
    } else {
      std::cout << prefix << ": " << node.dump() << "\n";
    }
  };
  walk(report, "");
}

json verdict_json(const PirVerdict& v) {
  json j;
  j["is_pir"] = v.is_pir;
  j["method"] = v.method;
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.torus_ideal) j["torus_ideal"] = rlie::io::subspace_json(*v.torus_ideal);
  if (v.cyclic_generator) j["cyclic_generator"] = rlie::io::vec_json(*v.cyclic_generator);
  if (v.witness_ideal) j["non_principal_witness"] = rlie::io::subspace_json(*v.witness_ideal);
  if (v.method == "brute") {
    j["ideal_count"] = v.ideal_count;
    j["principal_count"] = v.principal_count;
    j["complete"] = v.complete;
  }
  return j;
}

json base_report(const std::string& command) {
  json r;
  r["schema_version"] = 1;
  r["command"] = command;
  return r;
}

int cmd_validate(const Options& opt) {
  json report = base_report("validate " + opt.file);
  LieAlgebra L = rlie::io::parse_file(opt.file, opt.caps);  // throws on failure
  report["p"] = L.p;
  report["dim"] = L.dim;
  report["valid"] = true;
  print_report(report, opt.json_out);
  return kExitOk;
}

int cmd_analyze(const Options& opt) {
  LieAlgebra L = rlie::io::parse_file(opt.file, opt.caps);
  json report = base_report("analyze " + opt.file);
  report["p"] = L.p;
  report["dim"] = L.dim;
  report["abelian"] = L.is_abelian();
  report["center"] = rlie::io::subspace_json(rlie::rla::center(L));
  report["derived"] = rlie::io::subspace_json(rlie::rla::derived(L));
  report["frattini"] = rlie::io::subspace_json(rlie::rla::frattini(L));

  json gammas = json::array();
  for (int i = 1; i <= L.dim + 1; ++i)
    gammas.push_back(rlie::rla::gamma(L, i).dim());
  report["lower_central_series_dims"] = gammas;

  json dns = json::array();
  for (int n = 1; n <= 2 * L.p * std::max(1, L.dim); ++n) {
    int d = rlie::rla::dn(L, n, opt.caps.max_elements).dim();
    dns.push_back(d);
    if (d == 0) break;
  }
  report["dimension_subalgebra_dims"] = dns;

  if (L.is_abelian()) {
    rlie::rla::Fitting f = rlie::rla::fitting(L);
    report["fitting"] = {{"torus_part", rlie::io::subspace_json(f.torus_part)},
                         {"nil_part", rlie::io::subspace_json(f.nil_part)}};
  }
  report["is_torus"] = rlie::rla::is_torus(L);
  rlie::rla::CyclicResult cy = rlie::rla::is_cyclic(L, opt.caps.max_elements);
  report["is_cyclic"] = cy.cyclic;
  if (cy.generator) report["cyclic_generator"] = rlie::io::vec_json(*cy.generator);
  rlie::rla::CyclicResult nc = rlie::rla::is_nilcyclic(L, opt.caps.max_elements);
  report["is_nilcyclic"] = nc.cyclic;
  print_report(report, opt.json_out);
  return kExitOk;
}

int cmd_env(const Options& opt) {
  LieAlgebra L = rlie::io::parse_file(opt.file, opt.caps);
  rlie::uenv::EnvAlgebra A(L, opt.caps);
  json report = base_report("env " + opt.file);
  report["p"] = L.p;
  report["lie_dim"] = L.dim;
  report["env_dim"] = A.dim_env();
  rlie::uenv::IntegralSpace ints = rlie::uenv::integrals(A);
  report["left_integral"] = rlie::io::vec_json(ints.left.basis[0]);
  report["right_integral"] = rlie::io::vec_json(ints.right.basis[0]);
  report["epsilon_of_left_integral"] = static_cast<int>(A.epsilon(ints.left.basis[0]));
  json descent = json::array();
  for (int n = 1;; ++n) {
    int d = rlie::uenv::omega_power(A, n).dim();
    descent.push_back(d);
    if (d == 0 || n > 2 * L.p * std::max(1, L.dim) + 2) break;
  }
  report["omega_power_dims"] = descent;
  if (rlie::uenv::is_commutative(A))
    report["commutative_radical_dim"] = rlie::uenv::commutative_radical(A).dim();
  print_report(report, opt.json_out);
  return kExitOk;
}

int cmd_pir(const Options& opt) {
  LieAlgebra L = rlie::io::parse_file(opt.file, opt.caps);
  json report = base_report("pir " + opt.file + " --method " + opt.method);
  int exit_code = kExitOk;
  std::optional<PirVerdict> s, b;
  if (opt.method == "structural" || opt.method == "both")
    s = rlie::criterion::structural_decision(L, opt.caps);
  if (opt.method == "brute" || opt.method == "both")
    b = rlie::criterion::brute_decision(L, opt.caps);
  if (s) report["structural"] = verdict_json(*s);
  if (b) report["brute"] = verdict_json(*b);
  if (s && b) {
    bool agree = s->is_pir == b->is_pir;
    report["agreement"] = agree;
    if (!agree) exit_code = kExitInternal;
  }
  print_report(report, opt.json_out);
  return exit_code;
}

int cmd_audit(const Options& opt) {
  rlie::criterion::AuditReport rep = rlie::criterion::audit(
      opt.p, opt.dim, opt.exhaustive, opt.sample, opt.seed, opt.caps);
  std::string cmd = "audit --p " + std::to_string(opt.p) + " --dim " + std::to_string(opt.dim) +
                    (opt.exhaustive ? " --exhaustive"
                                    : " --sample " + std::to_string(opt.sample) + " --seed " +
                                          std::to_string(opt.seed));
  json report = base_report(cmd);
  report["mode"] = opt.exhaustive ? "exhaustive" : "sampled";
  report["count"] = rep.count;
  report["agreements"] = rep.agreements;
  json bad = json::array();
  // Disagreement artifacts are complete input documents for one-command
  // reproduction.
  for (const LieAlgebra& L : rep.disagreements) bad.push_back(rlie::io::emit(L));
  report["disagreements"] = bad;
  print_report(report, opt.json_out);
  return rep.passed() ? kExitOk : kExitInternal;
}

int cmd_catalog_list(const Options& opt) {
  json report = base_report("catalog list");
  report["kinds"] = rlie::catalog::kinds();
  print_report(report, opt.json_out);
  return kExitOk;
}

int cmd_catalog_emit(const Options& opt) {
  LieAlgebra L = rlie::catalog::make(opt.kind, opt.p, opt.dim, opt.a, opt.b);
  std::cout << rlie::io::emit(L).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"restricted Lie algebras over F_p and the principal-ideal-ring "
               "property of their enveloping algebras"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--max-elements", opt.caps.max_elements, "element scan budget");
  app.add_option("--max-lattice", opt.caps.max_lattice, "ideal lattice cap");
  app.add_option("--max-env-dim", opt.caps.max_env_dim, "largest p^dim for u(L)");

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json_out, "JSON report"); };

  CLI::App* v = app.add_subcommand("validate", "check the axioms of an algebra document");
  v->add_option("file", opt.file, "algebra document")->required();
  add_json(v);

  CLI::App* an = app.add_subcommand("analyze", "series, center, D_n table, Fitting, flags");
  an->add_option("file", opt.file, "algebra document")->required();
  add_json(an);

  CLI::App* en = app.add_subcommand("env", "u(L): dimensions, integrals, omega descent");
  en->add_option("file", opt.file, "algebra document")->required();
  add_json(en);

  CLI::App* pi = app.add_subcommand("pir", "decide the principal-ideal-ring property");
  pi->add_option("file", opt.file, "algebra document")->required();
  pi->add_option("--method", opt.method, "structural|brute|both")
      ->check(CLI::IsMember({"structural", "brute", "both"}));
  add_json(pi);

  CLI::App* au = app.add_subcommand("audit", "compare structural and brute deciders");
  au->add_option("--p", opt.p, "prime")->required();
  au->add_option("--dim", opt.dim, "dimension")->required();
  au->add_flag("--exhaustive", opt.exhaustive, "every valid table");
  au->add_option("--sample", opt.sample, "number of sampled algebras");
  au->add_option("--seed", opt.seed, "sampling seed");
  add_json(au);

  CLI::App* ca = app.add_subcommand("catalog", "named algebra families");
  CLI::App* cl = ca->add_subcommand("list", "list kinds");
  add_json(cl);
  CLI::App* ce = ca->add_subcommand("emit", "emit a catalog algebra as a document");
  ce->add_option("kind", opt.kind, "family name")->required();
  ce->add_option("--p", opt.p, "prime");
  ce->add_option("--dim", opt.dim, "dimension");
  ce->add_option("--a", opt.a, "mixed: torus dimension");
  ce->add_option("--b", opt.b, "mixed: nilcyclic dimension");
  ca->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (v->parsed()) return cmd_validate(opt);
    if (an->parsed()) return cmd_analyze(opt);
    if (en->parsed()) return cmd_env(opt);
    if (pi->parsed()) return cmd_pir(opt);
    if (au->parsed()) {
      if (opt.exhaustive == (opt.sample > 0)) {
        std::cerr << "audit: pass exactly one of --exhaustive or --sample N\n";
        return kExitInput;
      }
      return cmd_audit(opt);
    }
    if (ca->parsed()) return cl->parsed() ? cmd_catalog_list(opt) : cmd_catalog_emit(opt);
  } catch (const rlie::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const rlie::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const rlie::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const rlie::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
