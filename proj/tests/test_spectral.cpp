#include "doctest.h"
#include "formdual/catalog.hpp"
#include "formdual/discrete_symmetry.hpp"
#include "formdual/duality.hpp"
#include "formdual/errors.hpp"
#include "formdual/spectral.hpp"

using namespace formdual;

namespace {

RationalPolynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPolynomial(v);
}

LinearOperator diag_operator(std::initializer_list<long> d) {
  RationalMatrix m(d.size(), d.size());
  std::size_t i = 0;
  for (long x : d) {
    m(i, i) = x;
    ++i;
  }
  return LinearOperator(static_cast<int>(d.size()), 1, 1, m);
}

}  // namespace

TEST_CASE("rational square roots and surds") {
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(2));
  CHECK_FALSE(rational_sqrt(-4));
  auto s = sqrt_surd(8);
  CHECK(s.b == 2);
  CHECK(s.d == 2);
  auto t = sqrt_surd(Rational(11, 2));
  CHECK(t.b == Rational(1, 2));
  CHECK(t.d == 22);
  CHECK(sqrt_surd(9).d == 1);
}

TEST_CASE("rational root check") {
  auto roots = rational_root_check(P({0, -4, 0, 1}));
  CHECK(roots.size() == 3);
  CHECK(rational_root_check(P({-2, 0, 1})).empty());
}

TEST_CASE("split factors") {
  // (t - 1)(t^2 - 2)(t^2 + 1)
  auto f = split_factors(product({P({-1, 1}), P({-2, 0, 1}), P({1, 0, 1})}));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == P({-1, 1}));
  // t^4 - 6 t^2 + 1 = (t^2 - 2t - 1)(t^2 + 2t - 1)
  auto q = split_factors(P({1, 0, -6, 0, 1}));
  REQUIRE(q.size() == 2);
  CHECK(product(q) == P({1, 0, -6, 0, 1}));
  // t^4 - 14 t^2 + 16 stays whole
  auto r = split_factors(P({16, 0, -14, 0, 1}));
  REQUIRE(r.size() == 1);
  CHECK(r[0] == P({16, 0, -14, 0, 1}));
}

TEST_CASE("zero operator") {
  LinearOperator z(4, 2, 2);
  auto rep = spectrum(z, "zero");
  CHECK(rep.min_poly == P({0, 1}));
  REQUIRE(rep.eigen.size() == 1);
  CHECK(rep.eigen[0].dim == 6);
  CHECK(rep.trace_zero);
  CHECK(rep.dims_sum_ok);
}

TEST_CASE("diagonal operator") {
  auto rep = spectrum(diag_operator({2, 2, -1, -2}), "diag");
  CHECK(rep.min_poly.degree() == 3);
  CHECK(rep.squarefree);
  CHECK_FALSE(rep.trace_zero);
  CHECK(rep.dims_sum_ok);
  CHECK(rep.dim_of(P({-2, 1})) == 2);
  CHECK(rep.order == 3);
  CHECK_THROWS_AS(spectrum(LinearOperator(4, 1, 2), "x"), DomainError);
}

TEST_CASE("supplied factors are checked against the minimal polynomial") {
  auto op = diag_operator({1, -1, 0});
  auto good = spectrum(op, "d", std::vector<RationalPolynomial>{P({-1, 0, 1}), P({0, 1})});
  CHECK(good.expected_ok == true);
  auto bad = spectrum(op, "d", std::vector<RationalPolynomial>{P({-4, 0, 1}), P({0, 1})});
  CHECK(bad.expected_ok == false);
  CHECK_FALSE(bad.detail.empty());
}

TEST_CASE("spin(7) spectrum on 4-forms") {
  auto rep = spectrum(build_duality_operator(spin7_four_form(), 4).op, "b4");
  CHECK(rep.min_poly == product({P({0, 1}), P({4, 1}), P({2, 1}), P({-2, 3})}).monic());
  CHECK(rep.trace_zero);
  CHECK(rep.balance_ok);
  CHECK(perfectness(rep, 4));
  CHECK_FALSE(perfectness(rep, 5));
}

TEST_CASE("imaginary pairs and descriptors") {
  RationalMatrix m(2, 2);
  m(0, 1) = -3;
  m(1, 0) = 3;
  auto rep = spectrum(LinearOperator(2, 1, 1, m), "rot");
  REQUIRE(rep.eigen.size() == 1);
  CHECK(rep.eigen[0].value.kind == EigenvalueDescriptor::Kind::imaginary);
  CHECK(rep.eigen[0].value.surd.a == 3);
  CHECK(rep.eigen[0].value.surd.d == 1);
  CHECK(rep.eigen[0].value.kind_name() == "imaginary");
  CHECK(rep.trace_zero);
}

TEST_CASE("Z8 3-form spectrum dimensions") {
  auto s = z8_scalar();
  REQUIRE(s);
  auto rep = spectrum(z8_normalized_operator(3, *s), "z8 L3", z8_stated_factors(3));
  CHECK(rep.expected_ok == true);
  CHECK(rep.dim_of(P({0, 1})) == 16);
  CHECK(rep.dim_of(P({-2, 1})) == 8);
  CHECK(rep.dim_of(P({2, 1})) == 8);
  CHECK(rep.dim_of(P({-2, 0, 1})) == 8);
  CHECK(rep.dim_of(P({16, 0, -14, 0, 1})) == 16);
  CHECK(rep.split_ok);
}
