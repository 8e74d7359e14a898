#include "doctest.h"
#include "formdual/catalog.hpp"
#include "formdual/errors.hpp"
#include "formdual/lifts.hpp"

using namespace formdual;

TEST_CASE("component counts and norms") {
  CHECK(g2_three_form().terms().size() == 7);
  CHECK(g2_four_form().terms().size() == 7);
  CHECK(spin7_four_form().terms().size() == 14);
  CHECK(z8_four_form().terms().size() == 8);
  CHECK(inner_product(spin7_four_form(), spin7_four_form()) == 14);
  CHECK(inner_product(g2_three_form(), g2_three_form()) == 7);
  CHECK(inner_product(z8_four_form(), z8_four_form()) == 8);
}

TEST_CASE("sign normalization of listed components") {
  // 4 3 5 is stored as 3 4 5 with a minus sign
  CHECK(g2_three_form().coeff(MultiIndex::from_indices(7, {3, 4, 5})) == -1);
  CHECK(spin7_four_form().coeff(MultiIndex::from_indices(8, {1, 2, 6, 7})) == -1);
  // cyclic term e6781 = -e1678
  CHECK(z8_four_form().coeff(MultiIndex::from_indices(8, {1, 6, 7, 8})) == -1);
  CHECK(z8_four_form().coeff(MultiIndex::from_indices(8, {1, 2, 3, 4})) == 1);
}

TEST_CASE("G2 forms are Hodge dual") {
  CHECK(hodge_star(g2_three_form()) == g2_four_form());
  CHECK(hodge_star(g2_four_form()) == g2_three_form());
}

TEST_CASE("spin(7) form is self-dual and splits over G2") {
  auto theta = spin7_four_form();
  CHECK(hodge_star(theta) == theta);
  CHECK(theta == trivial_lift(g2_four_form(), 8) + wedge(trivial_lift(g2_three_form(), 8), basis_form(8, {8})));
}

TEST_CASE("quaternionic triple") {
  auto w1 = quaternionic_kahler_form(1, 1);
  CHECK(w1 == form_from_string(4, 2, "e12 + e34"));
  CHECK(quaternionic_kahler_form(1, 2) == form_from_string(4, 2, "e13 - e24"));
  CHECK(quaternionic_kahler_form(1, 3) == form_from_string(4, 2, "e14 + e23"));
  CHECK(quaternionic_four_form(1) == form_from_string(4, 4, "6 e1234"));
  CHECK(quaternionic_four_form(2).terms().size() > 0);
  CHECK_THROWS_AS(quaternionic_kahler_form(1, 4), DomainError);
  CHECK_THROWS_AS(quaternionic_kahler_form(5, 1), DomainError);
}

TEST_CASE("complex structure") {
  CHECK(complex_structure_form(3) == form_from_string(6, 2, "e12 + e34 + e56"));
  CHECK_THROWS_AS(complex_structure_form(0), DomainError);
}

TEST_CASE("form strings") {
  auto F = form_from_string(8, 4, "e1256 - e1458 + 2/3 e2367 + e4378");
  CHECK(F.coeff(MultiIndex::from_indices(8, {2, 3, 6, 7})) == Rational(2, 3));
  CHECK(F.coeff(MultiIndex::from_indices(8, {3, 4, 7, 8})) == -1);
  CHECK(z8_omega_partner() == form_from_string(8, 4, "e1256 - e1458 + e2367 + e3478"));
  CHECK_THROWS_AS(form_from_string(4, 2, "e12 + x34"), DomainError);
}

TEST_CASE("catalog lookup") {
  for (const char* name : {"theta7", "thetabar7", "theta8", "theta8hat", "z8", "complex2", "quat2"})
    CHECK_MESSAGE(find_form(name).has_value(), name);
  CHECK_FALSE(find_form("nosuch"));
  auto hat = find_form("theta8hat");
  REQUIRE(hat);
  CHECK(hat->D == 10);
  CHECK(hat->form.degree() == 6);
  CHECK(plane_volume_form(10) == basis_form(10, {9, 10}));
}
