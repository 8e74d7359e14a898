#pragma once

#include <string>

#include <json.hpp>

#include "formdual/discrete_symmetry.hpp"
#include "formdual/exterior.hpp"
#include "formdual/linear_operator.hpp"
#include "formdual/polynomial.hpp"
#include "formdual/spectral.hpp"

namespace formdual {

using Json = nlohmann::ordered_json;

// Rationals are always strings "p/q" (or "p" for integers), never floats.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const KForm& F);
KForm kform_from_json(const Json& j);

Json to_json(const RationalMatrix& m);  // sparse triplets, 0-indexed
RationalMatrix matrix_from_json(const Json& j);

Json to_json(const RationalPolynomial& p);
RationalPolynomial polynomial_from_json(const Json& j);

Json operator_json(const LinearOperator& op, const std::string& omega_name);
Json to_json(const EigenvalueDescriptor& e);
Json to_json(const SpectrumReport& r);
Json to_json(const RestrictedEquation& e);

}  // namespace formdual
