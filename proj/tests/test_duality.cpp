#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "formdual/catalog.hpp"
#include "formdual/duality.hpp"
#include "formdual/errors.hpp"
#include "formdual/spectral.hpp"
#include "util.hpp"

using namespace formdual;

namespace {

int perm_sign(const std::vector<int>& v) {
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return 0;
      inv += v[i] > v[j];
    }
  return (inv & 1) ? -1 : 1;
}

// Omega as a map from sorted tuples to integer coefficients, queried on ordered tuples.
struct IntForm {
  std::map<std::vector<int>, long> sorted;
  long operator()(std::vector<int> idx) const {
    int s = perm_sign(idx);
    if (!s) return 0;
    std::sort(idx.begin(), idx.end());
    auto it = sorted.find(idx);
    return it == sorted.end() ? 0 : s * it->second;
  }
};

IntForm from_list(const std::vector<std::vector<int>>& list) {
  IntForm f;
  for (auto idx : list) {
    int s = perm_sign(idx);
    std::sort(idx.begin(), idx.end());
    f.sorted[idx] += s;
  }
  return f;
}

IntForm from_kform(const KForm& F) {
  IntForm f;
  for (const auto& [I, c] : F.terms()) {
    REQUIRE(c.get_den() == 1);
    f.sorted[I.indices()] = c.get_num().get_si();
  }
  return f;
}

// k! * b(e_J)_I straight from the tensor formula:
// sum over output permutations pi and ordered m-tuples j of Omega(j, I_pi[0..m)) F_J(j, I_pi[m..k)).
long dense_entry(const IntForm& omega, int m, const std::vector<int>& I, const std::vector<int>& J) {
  const int k = static_cast<int>(I.size());
  std::vector<int> pi(k);
  std::iota(pi.begin(), pi.end(), 0);
  long total = 0;
  do {
    std::vector<int> permuted(k);
    for (int t = 0; t < k; ++t) permuted[t] = I[pi[t]];
    const int sp = perm_sign(pi);
    // ordered m-tuples drawn from J (F_J vanishes otherwise)
    std::vector<int> choose(k, 0);
    std::fill(choose.begin(), choose.begin() + m, 1);
    std::sort(choose.begin(), choose.end());
    do {
      std::vector<int> j;
      for (int t = 0; t < k; ++t)
        if (choose[t]) j.push_back(J[t]);
      do {
        std::vector<int> om(j), fj(j);
        om.insert(om.end(), permuted.begin(), permuted.begin() + m);
        fj.insert(fj.end(), permuted.begin() + m, permuted.end());
        int sf = perm_sign(fj);
        if (!sf) continue;
        std::vector<int> fs(fj);
        std::sort(fs.begin(), fs.end());
        if (fs != J) continue;
        total += sp * sf * omega(om);
      } while (std::next_permutation(j.begin(), j.end()));
    } while (std::next_permutation(choose.begin(), choose.end()));
  } while (std::next_permutation(pi.begin(), pi.end()));
  return total;
}

void check_against_dense(const KForm& omega, const IntForm& oracle, int k) {
  const int D = omega.dim(), m = omega.degree() / 2;
  auto b = build_duality_operator(omega, k);
  auto B = basis(D, k);
  mpz_class kf;
  mpz_fac_ui(kf.get_mpz_t(), k);
  std::size_t mismatches = 0;
  for (std::size_t c = 0; c < B.size(); ++c)
    for (std::size_t r = 0; r < B.size(); ++r) {
      Rational want(dense_entry(oracle, m, B[r].indices(), B[c].indices()));
      want /= kf;
      if (b.op.matrix(r, c) != want) ++mismatches;
    }
  CHECK(mismatches == 0);
}

std::map<Rational, std::size_t> rational_spec(const LinearOperator& op) {
  auto rep = spectrum(op, "t");
  std::map<Rational, std::size_t> out;
  for (const auto& e : rep.eigen) {
    REQUIRE(e.value.kind == EigenvalueDescriptor::Kind::rational);
    out[e.value.q] = e.dim;
  }
  return out;
}

const std::vector<std::vector<int>> kSpin7List = {{1, 2, 4, 5}, {1, 2, 7, 6}, {1, 3, 4, 6}, {1, 3, 5, 7}, {2, 3, 5, 6},
                                                  {2, 4, 3, 7}, {4, 5, 6, 7}, {1, 2, 3, 8}, {4, 3, 5, 8}, {4, 7, 1, 8},
                                                  {5, 1, 6, 8}, {5, 7, 2, 8}, {6, 2, 4, 8}, {6, 7, 3, 8}};

}  // namespace

TEST_CASE("spin(7) operator matches the dense tensor formula") {
  auto oracle = from_list(kSpin7List);
  for (int k : {2, 3, 4}) check_against_dense(spin7_four_form(), oracle, k);
}

TEST_CASE("other forms match the dense tensor formula") {
  check_against_dense(g2_four_form(), from_kform(g2_four_form()), 2);
  check_against_dense(g2_four_form(), from_kform(g2_four_form()), 3);
  check_against_dense(z8_four_form(), from_kform(z8_four_form()), 3);
  check_against_dense(quaternionic_four_form(1), from_kform(quaternionic_four_form(1)), 2);
  check_against_dense(complex_structure_form(3), from_kform(complex_structure_form(3)), 2);
  check_against_dense(complex_structure_form(3), from_kform(complex_structure_form(3)), 3);
}

TEST_CASE("matrix assembly agrees with direct contraction") {
  auto theta = spin7_four_form();
  for (int k : {2, 3, 4}) {
    auto b = build_duality_operator(theta, k);
    for (std::uint64_t s = 0; s < 4; ++s) {
      KForm F = testutil::random_form(8, k, 500 + 10 * k + s, 0.2);
      CHECK(apply(b, F) == apply_direct(b, F));
    }
  }
  auto b = build_duality_operator(complex_structure_form(4), 3);
  KForm F = testutil::random_form(8, 3, 77);
  CHECK(apply(b, F) == apply_direct(b, F));
}

TEST_CASE("worked spectra") {
  CHECK(rational_spec(build_duality_operator(spin7_four_form(), 3).op) ==
        std::map<Rational, std::size_t>{{-4, 8}, {Rational(2, 3), 48}});
  CHECK(rational_spec(build_duality_operator(spin7_four_form(), 2).op) ==
        std::map<Rational, std::size_t>{{-6, 7}, {2, 21}});
  CHECK(rational_spec(build_duality_operator(g2_four_form(), 2).op) ==
        std::map<Rational, std::size_t>{{-4, 7}, {2, 14}});
  // frozen from a numpy einsum computation: 6 e1234 on 2-forms of R^4
  CHECK(rational_spec(build_duality_operator(quaternionic_four_form(1), 2).op) ==
        std::map<Rational, std::size_t>{{-12, 3}, {12, 3}});
  // quaternionic 4-form on 2-forms of R^8: {-12:10, 4:15, 20:3}
  CHECK(rational_spec(build_duality_operator(quaternionic_four_form(2), 2).op) ==
        std::map<Rational, std::size_t>{{-12, 10}, {4, 15}, {20, 3}});
}

TEST_CASE("theta is an eigenform on 4-forms") {
  auto theta = spin7_four_form();
  auto b = build_duality_operator(theta, 4);
  CHECK(apply(b, theta) == Rational(-4) * theta);
}

TEST_CASE("degenerate cases vanish") {
  auto b = build_duality_operator(g2_three_form(), 2);
  CHECK(b.degenerate);
  CHECK(b.op.matrix.is_zero());
  auto c = build_duality_operator(spin7_four_form(), 1);
  CHECK(c.degenerate);
  CHECK(apply(c, basis_form(8, {3})).is_zero());
  CHECK(apply(build_duality_operator(spin7_four_form(), 3), KForm(8, 3)).is_zero());
}

TEST_CASE("order-two projections") {
  auto b = build_duality_operator(spin7_four_form(), 3);
  auto [p1, p2] = order2_projections(b, -4, Rational(2, 3));
  CHECK(compose(p1, p1).matrix == p1.matrix);
  CHECK(compose(p2, p2).matrix == p2.matrix);
  CHECK((p1 + p2).matrix == RationalMatrix::identity(56));
  CHECK(p1.matrix.trace() == 8);
  CHECK_THROWS_AS(order2_projections(b, 1, 1), ContractViolation);
  CHECK_THROWS_AS(order2_projections(b, 1, 2), ContractViolation);
}

TEST_CASE("contraction identities of theta") {
  for (const auto& c : theta_trace_identities(spin7_four_form())) CHECK_MESSAGE(c.holds, c.name << " " << c.detail);
  auto sq = theta_squared_decomposition(spin7_four_form());
  CHECK(sq.consistent);
  CHECK(sq.residual_zero);
}

TEST_CASE("hodge compatibility") {
  for (int k : {2, 3}) {
    for (const auto& c : hodge_compat_check(spin7_four_form(), k)) CHECK_MESSAGE(c.holds, c.name << " " << c.detail);
  }
  for (const auto& c : hodge_compat_check(spin7_four_form(), 4)) CHECK_MESSAGE(c.holds, c.name << " " << c.detail);
}

TEST_CASE("contraction maps have the right shapes") {
  auto theta = spin7_four_form();
  auto d = contraction_map(theta, ContractionVariant::d);
  auto dt = contraction_map(theta, ContractionVariant::d_tilde);
  CHECK(d.k_in == 5);
  CHECK(d.k_out == 3);
  CHECK(d.matrix.rows() == binomial(8, d.k_out));
  CHECK(dt.matrix.cols() == binomial(8, dt.k_in));
  CHECK(std::string(variant_name(ContractionVariant::e_tilde)) == "e~");
  CHECK_THROWS(contraction_map(g2_three_form(), ContractionVariant::c));
}

TEST_CASE("tensor expression with a delta kernel is the identity") {
  for (int k : {1, 2, 3}) {
    auto op = tensor_expression_operator(5, k, k, [k](const int* out, const int* in) {
      for (int t = 0; t < k; ++t)
        if (out[t] != in[t]) return Rational(0);
      return Rational(1);
    });
    CHECK(op.matrix == RationalMatrix::identity(binomial(5, k)));
  }
}

TEST_CASE("component table") {
  ComponentTable T(spin7_four_form());
  CHECK(T.at({0, 1, 3, 4}) == 1);
  CHECK(T.at({1, 0, 3, 4}) == -1);
  CHECK(T.at({0, 0, 3, 4}) == 0);
  CHECK(T.at({2, 4, 6, 0}) == -1);
  CHECK(T.at({0, 5, 6, 7}) == 0);
}
