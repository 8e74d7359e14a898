#pragma once

#include "formdual/matrix.hpp"
#include "formdual/polynomial.hpp"

namespace formdual {

RationalVector apply_polynomial(const RationalPolynomial& p, const SparseMatrix& m, const RationalVector& v);

// Monic least-degree p with p(M) v = 0.
RationalPolynomial vector_minimal_polynomial(const SparseMatrix& m, const RationalVector& v);

// Monic least-degree p with p(M) = 0: least common multiple of the per-basis-vector polynomials.
RationalPolynomial minimal_polynomial(const RationalMatrix& m);

// p(M), built column by column with Horner's scheme on sparse products.
RationalMatrix poly_eval_matrix(const RationalPolynomial& p, const RationalMatrix& m);

}  // namespace formdual
