#include <sstream>

#include "doctest.h"
#include "formdual/catalog.hpp"
#include "formdual/duality.hpp"
#include "formdual/json_io.hpp"
#include "formdual/report.hpp"
#include "formdual/spectral.hpp"
#include "formdual/suites.hpp"

using namespace formdual;

namespace {

std::string emit(const VerificationOutcome& o, ReportFormat f) {
  std::ostringstream os;
  emit_report(o, f, os);
  return os.str();
}

}  // namespace

TEST_CASE("empty suite passes") {
  VerificationOutcome o;
  o.suite = "empty";
  CHECK(o.passed());
  auto text = emit(o, ReportFormat::text);
  CHECK(text.find("0 checks, 0 failed: PASS") != std::string::npos);
  auto j = Json::parse(emit(o, ReportFormat::json));
  CHECK(j["status"] == "pass");
  CHECK(j["total"] == 0);
}

TEST_CASE("failing checks are reported and sorted") {
  VerificationOutcome o;
  o.suite = "demo";
  o.add("02.a", 2, "second", true, "");
  o.add("01.b", 1, "first", false, "got 3");
  CHECK_FALSE(o.passed());
  auto text = emit(o, ReportFormat::text);
  CHECK(text.find("[01.b] first: FAIL") < text.find("[02.a] second: PASS"));
  CHECK(text.find("      got 3") != std::string::npos);
  CHECK(text.find("2 checks, 1 failed: FAIL") != std::string::npos);
  auto j = Json::parse(emit(o, ReportFormat::json));
  CHECK(j["failed"] == 1);
  CHECK(j["checks"][0]["id"] == "01.b");
  CHECK(j["checks"][0]["status"] == "fail");
  CHECK(j["checks"][1]["criterion"] == 2);
  CHECK(emit(o, ReportFormat::json) == emit(o, ReportFormat::json));
}

TEST_CASE("json round trips") {
  Rational q(-7, 3);
  CHECK(rational_from_json(to_json(q)) == q);
  CHECK(to_json(q) == "-7/3");
  auto theta = spin7_four_form();
  CHECK(kform_from_json(to_json(theta)) == theta);
  auto m = build_duality_operator(theta, 2).op.matrix;
  CHECK(matrix_from_json(to_json(m)) == m);
  RationalPolynomial p({Rational(1, 2), 0, -3});
  CHECK(polynomial_from_json(to_json(p)) == p);
  CHECK_THROWS(rational_from_json(Json(1.5)));
}

TEST_CASE("operator and spectrum json") {
  auto b = build_duality_operator(spin7_four_form(), 2);
  auto j = operator_json(b.op, "theta8");
  CHECK(j["D"] == 8);
  CHECK(j["k_in"] == 2);
  CHECK(j["omega_name"] == "theta8");
  CHECK(matrix_from_json(j["matrix"]) == b.op.matrix);
  auto r = to_json(spectrum(b.op, "b2"));
  CHECK(r["ambient"] == 28);
  CHECK(r["eigen"].size() == 2);
  CHECK(r["trace_zero"] == true);
  CHECK(r["perfect"].is_null());
}

TEST_CASE("suite registry") {
  for (const auto& s : suite_names()) CHECK(is_suite(s));
  CHECK(is_suite("all"));
  CHECK_FALSE(is_suite("nosuch"));
  CHECK(stated_factors("theta8", 3).has_value());
  CHECK_FALSE(stated_factors("theta8", 7).has_value());
}

TEST_CASE("suites run deterministically") {
  auto a = run_suite("g2"), b = run_suite("g2");
  CHECK(a.passed());
  CHECK(emit(a, ReportFormat::json) == emit(b, ReportFormat::json));
  auto s = run_suite("spin7");
  CHECK(s.passed());
  CHECK(emit(s, ReportFormat::text).find("b^2 + 10/3 b - 8/3 id = 0 on 3-forms: PASS") != std::string::npos);
}
