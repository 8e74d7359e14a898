#include "formdual/linear_operator.hpp"

#include "formdual/errors.hpp"

namespace formdual {

LinearOperator::LinearOperator(int D_, int k_in_, int k_out_)
    : D(D_), k_in(k_in_), k_out(k_out_), matrix(binomial(D_, k_out_), binomial(D_, k_in_)) {}

LinearOperator::LinearOperator(int D_, int k_in_, int k_out_, RationalMatrix m)
    : D(D_), k_in(k_in_), k_out(k_out_), matrix(std::move(m)) {
  if (matrix.rows() != binomial(D, k_out) || matrix.cols() != binomial(D, k_in))
    throw DomainError("operator matrix shape does not match its degrees");
}

KForm LinearOperator::apply(const KForm& F) const {
  if (F.dim() != D || F.degree() != k_in) throw DomainError("apply: form does not match operator domain");
  return KForm::from_vector(D, k_out, matrix * F.to_vector());
}

LinearOperator identity_operator(int D, int k) {
  return LinearOperator(D, k, k, RationalMatrix::identity(binomial(D, k)));
}

LinearOperator hodge_operator(int D, int k) {
  LinearOperator op(D, k, D - k);
  auto B = basis(D, k);
  for (std::size_t j = 0; j < B.size(); ++j) {
    KForm img = hodge_star(KForm::from_vector(D, k, [&] {
      RationalVector e(B.size());
      e[j] = 1;
      return e;
    }()));
    for (const auto& [I, c] : img.terms()) op.matrix(basis_position(I), j) = c;
  }
  return op;
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  if (a.D != b.D || a.k_in != b.k_out) throw DomainError("compose: degree mismatch");
  return LinearOperator(a.D, b.k_in, a.k_out, a.matrix * b.matrix);
}

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
  if (a.D != b.D || a.k_in != b.k_in || a.k_out != b.k_out) throw DomainError("operator sum: shape mismatch");
  return LinearOperator(a.D, a.k_in, a.k_out, a.matrix + b.matrix);
}

LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
  if (a.D != b.D || a.k_in != b.k_in || a.k_out != b.k_out) throw DomainError("operator difference: shape mismatch");
  return LinearOperator(a.D, a.k_in, a.k_out, a.matrix - b.matrix);
}

LinearOperator operator*(const Rational& s, const LinearOperator& a) {
  return LinearOperator(a.D, a.k_in, a.k_out, s * a.matrix);
}

}  // namespace formdual
