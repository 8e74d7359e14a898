#include "formdual/minimal_polynomial.hpp"

#include "formdual/errors.hpp"
#include "formdual/parallel.hpp"

namespace formdual {

RationalVector apply_polynomial(const RationalPolynomial& p, const SparseMatrix& m, const RationalVector& v) {
  RationalVector acc(v.size());
  for (int i = p.degree(); i >= 0; --i) {
    acc = m * acc;
    const Rational& c = p.coeffs()[i];
    if (c != 0)
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) acc[j] += c * v[j];
  }
  return acc;
}

RationalPolynomial vector_minimal_polynomial(const SparseMatrix& m, const RationalVector& v) {
  struct Row {
    RationalVector vec;  // 1 at pivot, 0 at earlier pivots
    RationalPolynomial poly;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  RationalVector w = v;
  for (int deg = 0;; ++deg) {
    RationalVector r = w;
    RationalPolynomial poly = RationalPolynomial::monomial(deg);
    for (const auto& row : rows) {
      if (r[row.pivot] == 0) continue;
      Rational f = r[row.pivot];
      for (std::size_t j = 0; j < r.size(); ++j)
        if (row.vec[j] != 0) r[j] -= f * row.vec[j];
      poly = poly - f * row.poly;
    }
    std::size_t piv = r.size();
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] != 0) {
        piv = j;
        break;
      }
    if (piv == r.size()) return poly.monic();
    Rational inv = 1 / r[piv];
    for (auto& x : r)
      if (x != 0) x *= inv;
    rows.push_back({std::move(r), inv * poly, piv});
    w = m * w;
  }
}

RationalPolynomial minimal_polynomial(const RationalMatrix& m) {
  if (!m.is_square()) throw DomainError("minimal_polynomial: matrix not square");
  const std::size_t n = m.rows();
  SparseMatrix s(m);
  RationalPolynomial L = RationalPolynomial::constant(1);
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector e(n);
    e[j] = 1;
    if (is_zero(apply_polynomial(L, s, e))) continue;
    L = lcm(L, vector_minimal_polynomial(s, e));
  }
  return L;
}

RationalMatrix poly_eval_matrix(const RationalPolynomial& p, const RationalMatrix& m) {
  if (!m.is_square()) throw DomainError("poly_eval_matrix: matrix not square");
  const std::size_t n = m.rows();
  SparseMatrix s(m);
  RationalMatrix out(n, n);
  parallel_for(n, [&](std::size_t j) {
    RationalVector e(n);
    e[j] = 1;
    out.set_column(j, apply_polynomial(p, s, e));
  });
  return out;
}

}  // namespace formdual
