#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "formdual/catalog.hpp"
#include "formdual/discrete_symmetry.hpp"
#include "formdual/duality.hpp"
#include "formdual/errors.hpp"
#include "formdual/json_io.hpp"
#include "formdual/lifts.hpp"
#include "formdual/report.hpp"
#include "formdual/spectral.hpp"
#include "formdual/suites.hpp"

using namespace formdual;

namespace {

constexpr int kUsage = 2;

CatalogEntry require_form(const std::string& name) {
  auto e = find_form(name);
  if (!e) throw DomainError("unknown form: " + name);
  return *e;
}

int cmd_catalog(const std::string& dump) {
  if (!dump.empty()) {
    std::cout << to_json(require_form(dump).form).dump(2) << "\n";
    return 0;
  }
  for (const auto& e : catalog())
    std::cout << e.name << "  D=" << e.D << "  degree=" << e.form.degree() << "  components=" << e.form.terms().size()
              << "  " << e.note << "\n";
  return 0;
}

int cmd_operator(const std::string& form, int k, const std::string& out) {
  auto b = build_duality_operator(require_form(form).form, k);
  Json j = operator_json(b.op, form);
  j["degenerate"] = b.degenerate;
  if (out.empty()) {
    std::cout << j.dump() << "\n";
  } else {
    std::ofstream f(out);
    if (!f) throw DomainError("cannot write " + out);
    f << j.dump() << "\n";
  }
  return 0;
}

int cmd_spectrum(const std::string& form, int k, bool expect) {
  auto b = build_duality_operator(require_form(form).form, k);
  std::optional<std::vector<RationalPolynomial>> factors;
  if (expect) {
    factors = stated_factors(form, k);
    if (!factors) throw DomainError("no stated factorization for " + form + " on " + std::to_string(k) + "-forms");
  }
  auto rep = spectrum(b.op, "b_" + form + "|L" + std::to_string(k), factors);
  std::cout << to_json(rep).dump(2) << "\n";
  return rep.expected_ok.value_or(true) ? 0 : 1;
}

int cmd_lift(const std::string& form, int to, bool dual) {
  auto F = require_form(form).form;
  std::cout << to_json(dual ? hodge_dual_lift(F, to) : trivial_lift(F, to)).dump(2) << "\n";
  return 0;
}

int cmd_z8(int k) {
  auto s = z8_scalar();
  if (!s) {
    std::cerr << "no uniform scalar fits the stated spectra\n";
    return 1;
  }
  auto bh = z8_normalized_operator(k, *s);
  auto rep = spectrum(bh, std::to_string(z8_prefactor(k)) + " b_z8 / s |L" + std::to_string(k), z8_stated_factors(k));
  Json j = {{"k", k}, {"prefactor", z8_prefactor(k)}, {"scalar", to_json(*s)}, {"spectrum", to_json(rep)}};
  Json m = Json::object();
  for (const auto& [key, v] : sigma_multiplicities(k)) m[key] = v;
  j["sigma_multiplicities"] = m;
  Json eqs = Json::array();
  bool ok = rep.expected_ok.value_or(false);
  for (const auto& e : z8_restricted_equations(k, bh)) {
    eqs.push_back(to_json(e));
    ok = ok && e.holds;
  }
  j["restricted_equations"] = eqs;
  std::cout << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& format) {
  if (!is_suite(suite)) throw DomainError("unknown suite: " + suite);
  auto outcome = run_suite(suite);
  emit_report(outcome, format == "json" ? ReportFormat::json : ReportFormat::text, std::cout);
  return outcome.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact duality operators on exterior powers"};
  app.require_subcommand(1);

  std::string dump;
  auto* cat = app.add_subcommand("catalog", "list the named forms");
  cat->add_option("--dump", dump, "emit one form as JSON");

  std::string form, out, suite, format = "text";
  int k = 0, to = 0;
  bool expect = false, dual = false;

  auto* op = app.add_subcommand("operator", "emit the matrix of b_omega on k-forms");
  op->add_option("--form", form)->required();
  op->add_option("--k", k)->required();
  op->add_option("--out", out);

  auto* sp = app.add_subcommand("spectrum", "exact spectral report");
  sp->add_option("--form", form)->required();
  sp->add_option("--k", k)->required();
  sp->add_flag("--expect-suite", expect, "check against the stated factorization");

  auto* li = app.add_subcommand("lift", "lift a form to higher dimension");
  li->add_option("--form", form)->required();
  li->add_option("--to", to)->required();
  li->add_flag("--dual", dual, "Hodge-dual lift");

  auto* z8 = app.add_subcommand("z8", "cyclic-form analysis on k-forms");
  z8->add_option("--k", k)->required()->check(CLI::Range(2, 4));

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("--suite", suite)->required();
  ve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cat) return cmd_catalog(dump);
    if (*op) return cmd_operator(form, k, out);
    if (*sp) return cmd_spectrum(form, k, expect);
    if (*li) return cmd_lift(form, to, dual);
    if (*z8) return cmd_z8(k);
    if (*ve) return cmd_verify(suite, format);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
