#include "doctest.h"
#include "formdual/catalog.hpp"
#include "formdual/duality.hpp"
#include "formdual/errors.hpp"
#include "formdual/lifts.hpp"
#include "util.hpp"

using namespace formdual;

TEST_CASE("trivial lift keeps components") {
  auto theta = spin7_four_form();
  auto t = trivial_lift(theta, 10);
  CHECK(t.dim() == 10);
  CHECK(t.terms().size() == 14);
  CHECK(t.coeff(MultiIndex::from_indices(10, {1, 2, 4, 5})) == 1);
  CHECK(trivial_lift(theta, 8) == theta);
  CHECK_THROWS_AS(trivial_lift(theta, 7), DomainError);
}

TEST_CASE("Hodge-dual lift is theta wedge the plane volume") {
  auto theta = spin7_four_form();
  auto hat = hodge_dual_lift(theta, 10);
  CHECK(hat.degree() == 6);
  CHECK(hat == wedge(trivial_lift(theta, 10), plane_volume_form(10)));
  CHECK(inner_product(hat, hat) == 14);
  CHECK(hodge_dual_lift(KForm::from_vector(4, 0, {Rational(1)}), 6) == basis_form(6, {1, 2, 3, 4, 5, 6}));
}

TEST_CASE("split basis sizes") {
  SplitBasis s(8, 4);
  CHECK(s.D_total == 10);
  CHECK(s.block_size[0] == 70);
  CHECK(s.block_size[1] == 2 * 56);
  CHECK(s.block_size[2] == 28);
  std::size_t total = 0;
  for (int j = 0; j < 3; ++j) {
    CHECK(s.members[j].size() == s.block_size[j]);
    total += s.block_size[j];
  }
  CHECK(total == binomial(10, 4));
  for (std::size_t p = 0; p < total; ++p) CHECK(s.members[s.block_of[p]][s.offset_in[p]] == p);
}

TEST_CASE("block decomposition round trip") {
  auto b = build_duality_operator(hodge_dual_lift(spin7_four_form(), 10), 3);
  SplitBasis s(8, 3);
  auto grid = block_decompose(b.op, s);
  CHECK(assemble_blocks(grid, s) == b.op.matrix);
  CHECK(grid.block[0][0].rows() == 56);
  CHECK(grid.block[1][1].rows() == 56);
  CHECK(grid.block[2][2].rows() == 8);
}

TEST_CASE("trivial lift blocks are scaled copies") {
  auto theta = spin7_four_form();
  auto b = build_duality_operator(trivial_lift(theta, 10), 4);
  auto grid = block_decompose(b.op, SplitBasis(8, 4));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(grid.is_zero(i, j));
  auto named = [&](int k) { return build_duality_operator(theta, k).op.matrix; };
  auto p0 = proportionality(grid.block[0][0], named(4));
  CHECK(p0.proportional);
  CHECK(p0.lambda == 1);
  auto p1 = proportionality(grid.block[1][1], kron(named(3), RationalMatrix::identity(2)));
  CHECK(p1.proportional);
  CHECK(p1.lambda == Rational(1, 2));
  auto p2 = proportionality(grid.block[2][2], named(2));
  CHECK(p2.proportional);
  CHECK(p2.lambda == Rational(1, 6));
}

TEST_CASE("kron and plane star") {
  RationalMatrix a(1, 2);
  a(0, 0) = 2;
  a(0, 1) = 3;
  auto k = kron(a, RationalMatrix::identity(2));
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 4);
  CHECK(k(1, 3) == 3);
  CHECK(k(0, 1) == 0);
  CHECK(plane_star(0)(0, 0) == 1);
  auto s1 = plane_star(1);
  CHECK(s1(1, 0) == 1);
  CHECK(s1(0, 1) == -1);
  CHECK(plane_star(1) * plane_star(1) == Rational(-1) * RationalMatrix::identity(2));
}

TEST_CASE("proportionality edge cases") {
  RationalMatrix z(2, 2), id = RationalMatrix::identity(2);
  CHECK(proportionality(z, z).both_zero);
  CHECK_FALSE(proportionality(z, z).proportional);
  auto p = proportionality(z, id);
  CHECK(p.proportional);
  CHECK(p.lambda == 0);
  CHECK_FALSE(proportionality(id, z).proportional);
  RationalMatrix m = id;
  m(0, 1) = 1;
  CHECK_FALSE(proportionality(m, id).proportional);
  CHECK(proportionality(Rational(-3) * id, id).lambda == -3);
}
