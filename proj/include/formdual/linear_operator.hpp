#pragma once

#include "formdual/exterior.hpp"
#include "formdual/matrix.hpp"

namespace formdual {

// Exact matrix Lambda^k_in R^D -> Lambda^k_out R^D in the lexicographic basis.
struct LinearOperator {
  int D = 0;
  int k_in = 0;
  int k_out = 0;
  RationalMatrix matrix;

  LinearOperator() = default;
  LinearOperator(int D, int k_in, int k_out);
  LinearOperator(int D, int k_in, int k_out, RationalMatrix m);

  KForm apply(const KForm& F) const;
  bool is_square() const { return k_in == k_out; }
};

LinearOperator identity_operator(int D, int k);
LinearOperator hodge_operator(int D, int k);
// a after b
LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator+(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator-(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator*(const Rational& s, const LinearOperator& a);

}  // namespace formdual
