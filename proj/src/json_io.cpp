#include "formdual/json_io.hpp"

#include "formdual/errors.hpp"

namespace formdual {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("rational must be a string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

Json to_json(const KForm& F) {
  Json terms = Json::array();
  for (const auto& [I, c] : F.terms()) terms.push_back({{"idx", I.indices()}, {"c", to_json(c)}});
  return {{"D", F.dim()}, {"k", F.degree()}, {"terms", terms}};
}

KForm kform_from_json(const Json& j) {
  KForm F(j.at("D").get<int>(), j.at("k").get<int>());
  for (const auto& t : j.at("terms")) F.add_component(t.at("idx").get<std::vector<int>>(), rational_from_json(t.at("c")));
  return F;
}

Json to_json(const RationalMatrix& m) {
  Json trip = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) trip.push_back(Json::array({i, j, to_json(m(i, j))}));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"triplets", trip}};
}

RationalMatrix matrix_from_json(const Json& j) {
  RationalMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  for (const auto& t : j.at("triplets")) {
    auto i = t.at(0).get<std::size_t>(), c = t.at(1).get<std::size_t>();
    if (i >= m.rows() || c >= m.cols()) throw DomainError("triplet out of range");
    m(i, c) = rational_from_json(t.at(2));
  }
  return m;
}

Json to_json(const RationalPolynomial& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_json(x));
  return {{"coeffs", c}};
}

RationalPolynomial polynomial_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
  return RationalPolynomial(std::move(c));
}

Json operator_json(const LinearOperator& op, const std::string& omega_name) {
  Json j = {{"D", op.D}, {"k_in", op.k_in}, {"k_out", op.k_out}, {"omega_name", omega_name},
            {"kappa", to_json(kKappa)}};
  j["matrix"] = to_json(op.matrix);
  return j;
}

namespace {

Json surd_json(const QuadraticSurd& s) {
  return {{"a", to_json(s.a)}, {"b", to_json(s.b)}, {"d", s.d.get_str()}, {"text", s.to_string()}};
}

}  // namespace

Json to_json(const EigenvalueDescriptor& e) {
  Json v;
  using K = EigenvalueDescriptor::Kind;
  switch (e.kind) {
    case K::rational: v = {{"q", to_json(e.q)}}; break;
    case K::surd: v = surd_json(e.surd); break;
    case K::imaginary: v = {{"mu", surd_json(e.surd)}}; break;
    case K::quartic:
      v = {{"factor", to_json(e.factor)}};
      if (e.denested) {
        v["A"] = to_json(e.A);
        v["B"] = to_json(e.B);
      }
      break;
    case K::family: v = {{"factor", to_json(e.factor)}}; break;
  }
  v["text"] = e.to_string();
  return {{"type", e.kind_name()}, {"value", v}};
}

Json to_json(const SpectrumReport& r) {
  Json eigen = Json::array();
  for (const auto& e : r.eigen) {
    Json x = to_json(e.value);
    x["dim"] = e.dim;
    eigen.push_back(x);
  }
  Json factors = Json::array();
  for (const auto& f : r.factors) factors.push_back({{"factor", to_json(f.factor)}, {"dim", f.dim}});
  Json j = {{"operator", r.name},         {"ambient", r.ambient}, {"min_poly", to_json(r.min_poly)},
            {"factors", factors},         {"eigen", eigen},       {"trace_zero", r.trace_zero},
            {"balance", r.balance_ok},    {"order", r.order}};
  j["perfect"] = r.perfect ? Json(*r.perfect) : Json(nullptr);
  if (r.expected_ok) j["expected_ok"] = *r.expected_ok;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json to_json(const RestrictedEquation& e) {
  Json m = Json::object();
  for (const auto& [k, v] : e.multiplicities) m[k] = v;
  Json j = {{"eigenspace", e.label},   {"dim", e.dim},
            {"expected", to_json(e.expected)}, {"computed", to_json(e.computed)},
            {"invariant", e.invariant}, {"holds", e.holds},
            {"sigma_multiplicities", m}};
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

}  // namespace formdual
