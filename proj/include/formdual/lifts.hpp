#pragma once

#include <array>
#include <optional>
#include <vector>

#include "formdual/linear_operator.hpp"

namespace formdual {

KForm trivial_lift(const KForm& F, int D_new);
KForm hodge_dual_lift(const KForm& F, int D_new);

// Lambda^k R^(base+2) = Lambda^k R^base + Lambda^(k-1) R^base (x) R^2 + Lambda^(k-2) R^base (x) Lambda^2 R^2.
// Block j holds the forms with j indices among the last two; inside a block the order is
// (base multi-index major, plane multi-index minor).
struct SplitBasis {
  int D_total = 0, D_base = 0, k = 0;
  std::array<std::size_t, 3> block_size{};
  std::vector<int> block_of;           // by position in basis(D_total, k)
  std::vector<std::size_t> offset_in;  // position inside its block
  std::array<std::vector<std::size_t>, 3> members;  // positions in basis(D_total, k), block order

  SplitBasis(int D_base, int k);
};

struct BlockGrid {
  std::array<std::array<RationalMatrix, 3>, 3> block;  // block[out][in]
  bool is_zero(int out, int in) const { return block[out][in].is_zero(); }
};

BlockGrid block_decompose(const LinearOperator& op, const SplitBasis& split);
// Inverse of block_decompose for the same split.
RationalMatrix assemble_blocks(const BlockGrid& grid, const SplitBasis& split);

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);
// Matrix of the Hodge star of the plane, Lambda^j R^2 -> Lambda^(2-j) R^2.
RationalMatrix plane_star(int j);

// lambda with block == lambda * named, decided exactly; nullopt when no such lambda exists or both vanish.
struct Proportionality {
  bool proportional = false;
  bool both_zero = false;
  Rational lambda = 0;
};
Proportionality proportionality(const RationalMatrix& block, const RationalMatrix& named);

}  // namespace formdual
