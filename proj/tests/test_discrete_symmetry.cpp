#include "doctest.h"
#include "formdual/catalog.hpp"
#include "formdual/discrete_symmetry.hpp"
#include "formdual/duality.hpp"
#include "formdual/errors.hpp"

using namespace formdual;

namespace {

RationalPolynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPolynomial(v);
}

}  // namespace

TEST_CASE("sigma shifts indices cyclically") {
  auto s = sigma_operator(1, 2);
  CHECK(s.apply(basis_form(8, {1, 5})) == basis_form(8, {2, 6}));
  CHECK(s.apply(basis_form(8, {4, 8})) == Rational(-1) * basis_form(8, {1, 5}));
  CHECK(sigma_operator(0, 3).matrix == RationalMatrix::identity(56));
  CHECK_THROWS_AS(sigma_operator(8, 2), DomainError);
}

TEST_CASE("sigma is a representation of Z8") {
  for (int k : {2, 3, 4}) {
    auto s1 = sigma_operator(1, k);
    LinearOperator acc = identity_operator(8, k);
    for (int a = 1; a <= 8; ++a) {
      acc = compose(s1, acc);
      if (a < 8) CHECK(acc.matrix == sigma_operator(a, k).matrix);
    }
    CHECK(acc.matrix == RationalMatrix::identity(binomial(8, k)));
    CHECK(compose(sigma_operator(3, k), sigma_operator(6, k)).matrix == sigma_operator(1, k).matrix);
  }
}

TEST_CASE("sigma multiplicities") {
  // three free orbits of 2-forms plus the four-element orbit of e15 with sigma^4 = -1
  auto m2 = sigma_multiplicities(2);
  CHECK(m2["1"] == 3);
  CHECK(m2["-1"] == 3);
  CHECK(m2["i"] == 3);
  CHECK(m2["-i"] == 3);
  CHECK(m2["primitive"] == 4);
  auto m3 = sigma_multiplicities(3);
  for (const char* key : {"1", "-1", "i", "-i", "primitive"}) CHECK(m3[key] == 7);
  for (int k : {2, 3, 4}) {
    auto m = sigma_multiplicities(k);
    CHECK(m["1"] + m["-1"] + m["i"] + m["-i"] + 4 * m["primitive"] == binomial(8, k));
  }
  CHECK_THROWS_AS(sigma_multiplicities(5), DomainError);
}

TEST_CASE("sigma commutes with the cyclic operator") {
  for (int k : {2, 3, 4}) {
    auto b = build_duality_operator(z8_four_form(), k).op;
    auto s = sigma_operator(1, k);
    CHECK(compose(s, b).matrix == compose(b, s).matrix);
  }
}

TEST_CASE("restricted minimal equation") {
  auto s = sigma_operator(1, 2);
  auto v = basis_form(8, {1, 5});
  std::vector<RationalVector> orbit;
  for (int a = 0; a < 4; ++a) orbit.push_back(sigma_operator(a, 2).apply(v).to_vector());
  CHECK(restricted_minimal_equation(s, orbit) == P({1, 0, 0, 0, 1}));
  CHECK_THROWS_AS(restricted_minimal_equation(s, {v.to_vector()}), ContractViolation);
}

TEST_CASE("rational n-th roots") {
  CHECK(rational_root_n(Rational(27, 8), 3) == Rational(3, 2));
  CHECK(rational_root_n(-8, 3) == Rational(-2));
  CHECK(rational_root_n(16, 4) == Rational(2));
  CHECK_FALSE(rational_root_n(2, 2));
  CHECK_FALSE(rational_root_n(-4, 2));
}

TEST_CASE("uniform scalar fit") {
  CHECK(fit_uniform_scalar({{P({-4, 0, 1}), P({-1, 0, 1})}, {P({0, 1}), P({0, 1})}}) == Rational(2));
  CHECK(fit_uniform_scalar({{P({-4, 0, 1}), P({-1, 0, 1})}, {P({-9, 0, 1}), P({-1, 0, 1})}}) == std::nullopt);
  CHECK(fit_uniform_scalar({{P({-3, 0, 1}), P({-1, 0, 1})}}) == std::nullopt);
}

TEST_CASE("fitted cyclic scalar and prefactors") {
  CHECK(z8_prefactor(2) == 1);
  CHECK(z8_prefactor(3) == 3);
  CHECK(z8_prefactor(4) == 6);
  auto s = z8_scalar();
  REQUIRE(s);
  CHECK(*s == 2);
  auto bhat = z8_normalized_operator(4, *s);
  CHECK(bhat.matrix == Rational(3) * build_duality_operator(z8_four_form(), 4).op.matrix);
}

TEST_CASE("restricted sigma equations and listed vectors hold") {
  auto s = z8_scalar();
  REQUIRE(s);
  for (int k : {2, 3, 4}) {
    auto bhat = z8_normalized_operator(k, *s);
    for (const auto& eq : z8_restricted_equations(k, bhat)) {
      CHECK_MESSAGE(eq.invariant, eq.label);
      CHECK_MESSAGE(eq.holds, eq.label << " computed " << eq.computed.to_string());
    }
    for (const auto& c : verify_listed_vectors(k, bhat)) CHECK_MESSAGE(c.holds, c.name << " " << c.detail);
  }
}
