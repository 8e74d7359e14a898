#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "formdual/duality.hpp"
#include "formdual/polynomial.hpp"

namespace formdual {

// sigma_a(e_{i1..ik}) = e_{i1+a..ik+a} on Lambda^k R^8, indices wrapped into 1..8.
LinearOperator sigma_operator(int a, int k);

// Multiplicities of the eighth roots of unity as eigenvalues of an operator with sigma^8 = 1.
// Keys: "1", "-1", "i", "-i", "primitive" (each of the four primitive roots).
std::map<std::string, std::size_t> cyclic_multiplicities(const RationalMatrix& sigma);
std::map<std::string, std::size_t> sigma_multiplicities(int k);

RationalPolynomial restricted_minimal_equation(const LinearOperator& sigma, const std::vector<RationalVector>& subspace);

int z8_prefactor(int k);  // the stated scalar multiple of b in degree k
// Stated minimal polynomial of (prefactor * b) in degree k, factor by factor.
std::vector<RationalPolynomial> z8_stated_factors(int k);

std::optional<Rational> rational_root_n(const Rational& q, int n);
// One s with computed(t) = s^n stated(t / s) for every pair; nullopt if none exists.
std::optional<Rational> fit_uniform_scalar(
    const std::vector<std::pair<RationalPolynomial, RationalPolynomial>>& computed_vs_stated);

// Fitted scalar between c_k * b and the stated spectra over k = 2, 3, 4 (computed once).
std::optional<Rational> z8_scalar();
// c_k * b / s
LinearOperator z8_normalized_operator(int k, const Rational& s);

struct RestrictedEquation {
  std::string label;
  std::size_t dim = 0;
  RationalPolynomial expected;
  RationalPolynomial computed;
  bool invariant = false;
  bool holds = false;
  std::map<std::string, std::size_t> multiplicities;  // restricted sigma
  std::string note;
};
std::vector<RestrictedEquation> z8_restricted_equations(int k, const LinearOperator& bhat);

std::vector<IdentityCheck> verify_listed_vectors(int k, const LinearOperator& bhat);

}  // namespace formdual
