#include <atomic>
#include <cstdlib>
#include <random>

#include "doctest.h"
#include "formdual/errors.hpp"
#include "formdual/matrix.hpp"
#include "formdual/minimal_polynomial.hpp"
#include "formdual/parallel.hpp"
#include "formdual/polynomial.hpp"

using namespace formdual;

namespace {

RationalMatrix mat(std::size_t n, std::initializer_list<long> entries) {
  RationalMatrix m(entries.size() / n, n);
  std::size_t i = 0;
  for (long e : entries) {
    m(i / n, i % n) = e;
    ++i;
  }
  return m;
}

RationalPolynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPolynomial(v);
}

RationalMatrix random_int_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-2, 2);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

// Independent check of minimality: I, M, ..., M^(d-1) flattened as columns have rank d.
bool powers_independent(const RationalMatrix& m, int d) {
  const std::size_t n = m.rows();
  RationalMatrix flat(n * n, d);
  RationalMatrix pw = RationalMatrix::identity(n);
  for (int j = 0; j < d; ++j) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) flat(a * n + b, j) = pw(a, b);
    pw = pw * m;
  }
  return rank(flat) == static_cast<std::size_t>(d);
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-8")) == "-8");
  CHECK(to_string(Rational(0)) == "0");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("rref, rank and kernel") {
  auto m = mat(3, {1, 2, 3, 2, 4, 6, 1, 0, 1});
  auto r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  auto K = kernel_basis(m);
  REQUIRE(K.size() == 1);
  CHECK(is_zero(m * K[0]));
  CHECK_FALSE(is_zero(K[0]));
  CHECK(rank(RationalMatrix::identity(5)) == 5);
  CHECK(kernel_basis(RationalMatrix(2, 4)).size() == 4);
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto a = random_int_matrix(6, s);
    a.set_column(5, add(a.column(0), a.column(1)));
    auto k = kernel_basis(a);
    CHECK(rank(a) + k.size() == 6);
    for (const auto& v : k) CHECK(is_zero(a * v));
  }
}

TEST_CASE("restriction to invariant subspaces") {
  auto m = mat(3, {2, 1, 0, 0, 2, 0, 0, 0, 5});
  RationalVector e0{1, 0, 0}, e1{0, 1, 0}, e2{0, 0, 1};
  auto r = restrict_to(m, {e0, e1});
  REQUIRE(r.invariant);
  CHECK(r.matrix == mat(2, {2, 1, 0, 2}));
  CHECK_FALSE(restrict_to(m, {e1}).invariant);
  CHECK(in_span({e0, e1}, RationalVector{3, -1, 0}));
  CHECK_FALSE(in_span({e0, e1}, RationalVector{0, 0, 1}));
}

TEST_CASE("polynomial arithmetic") {
  auto a = P({-1, 0, 1});  // t^2 - 1
  auto b = P({1, 1});      // t + 1
  auto [q, r] = divmod(a, b);
  CHECK(q == P({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(a, P({1, 2, 1})) == b);
  CHECK(lcm(P({-1, 1}), P({1, 1})) == a);
  CHECK(product({P({-1, 1}), P({1, 1})}) == a);
  CHECK(P({4, 0, 1}).rescale(2) == P({4, 0, 4}));
  CHECK(P({4, 0, 1}).even_part_in_square() == P({4, 1}));
  CHECK(P({4, 1}).substitute_square() == P({4, 0, 1}));
  CHECK(P({0, 0, 2}).monic() == P({0, 0, 1}));
  CHECK(P({-2, 0, 1}).to_string() == "t^2 - 2");
}

TEST_CASE("rational roots by divisor enumeration") {
  // (t)(t+4)(t+3)(t+2)(3t-2)
  auto p = product({P({0, 1}), P({4, 1}), P({3, 1}), P({2, 1}), P({-2, 3})});
  auto roots = rational_roots(p);
  std::vector<Rational> vals;
  for (const auto& r : roots) {
    CHECK(r.multiplicity == 1);
    vals.push_back(r.value);
  }
  std::sort(vals.begin(), vals.end());
  CHECK(vals == std::vector<Rational>{-4, -3, -2, 0, Rational(2, 3)});
  CHECK(rational_roots(P({1, 0, 1})).empty());
  CHECK(rational_roots(P({-2, 0, 1})).empty());
  auto dbl = rational_roots(P({1, -2, 1}));
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0].multiplicity == 2);
}

TEST_CASE("minimal polynomial of small matrices") {
  CHECK(minimal_polynomial(mat(3, {1, 0, 0, 0, 1, 0, 0, 0, 2})) == P({2, -3, 1}));
  CHECK(minimal_polynomial(mat(2, {1, 1, 0, 1})) == P({1, -2, 1}));
  CHECK(minimal_polynomial(RationalMatrix(4, 4)) == P({0, 1}));
  CHECK(minimal_polynomial(mat(2, {0, -1, 1, 0})) == P({1, 0, 1}));
}

TEST_CASE("minimal polynomial annihilates and is minimal") {
  for (std::uint64_t s = 0; s < 8; ++s) {
    auto m = random_int_matrix(6, 1000 + s);
    if (s % 2) {
      // force a repeated block so the degree drops below 6
      for (std::size_t j = 0; j < 6; ++j) m(5, j) = m(4, j) = 0;
      m(4, 4) = m(5, 5) = 1;
    }
    auto p = minimal_polynomial(m);
    CHECK(p.leading() == 1);
    CHECK(poly_eval_matrix(p, m).is_zero());
    CHECK(powers_independent(m, p.degree()));
  }
}

TEST_CASE("vector minimal polynomial divides the matrix one") {
  auto m = mat(3, {2, 0, 0, 0, 3, 0, 0, 0, 3});
  auto pv = vector_minimal_polynomial(SparseMatrix(m), RationalVector{0, 1, 1});
  CHECK(pv == P({-3, 1}));
  CHECK(divmod(minimal_polynomial(m), pv).second.is_zero());
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) CHECK(h.load() == 1);
  setenv("FORMDUAL_THREADS", "3", 1);
  CHECK(thread_count() == 3u);
  setenv("FORMDUAL_THREADS", "junk", 1);
  CHECK(thread_count() >= 1u);
  unsetenv("FORMDUAL_THREADS");
}
