#include "formdual/lifts.hpp"

#include "formdual/errors.hpp"

namespace formdual {

KForm trivial_lift(const KForm& F, int D_new) {
  if (D_new < F.dim()) throw DomainError("lift: target dimension below source dimension");
  KForm out(D_new, F.degree());
  for (const auto& [I, c] : F.terms()) out.add(MultiIndex(D_new, I.bits()), c);
  return out;
}

KForm hodge_dual_lift(const KForm& F, int D_new) { return hodge_star(trivial_lift(F, D_new)); }

SplitBasis::SplitBasis(int base, int k_) : D_total(base + 2), D_base(base), k(k_) {
  if (k < 0 || k > D_total) throw DomainError("split basis: degree out of range");
  const auto B = basis(D_total, k);
  block_of.resize(B.size());
  offset_in.resize(B.size());
  for (int j = 0; j < 3; ++j) {
    if (k - j < 0 || k - j > base) continue;
    const auto inner = basis(base, k - j);
    const auto plane = basis(2, j);
    for (const auto& I : inner)
      for (const auto& P : plane) {
        std::uint32_t bits = I.bits() | (P.bits() << base);
        std::size_t pos = basis_position(MultiIndex(D_total, bits));
        block_of[pos] = j;
        offset_in[pos] = members[j].size();
        members[j].push_back(pos);
      }
    block_size[j] = members[j].size();
  }
}

BlockGrid block_decompose(const LinearOperator& op, const SplitBasis& split) {
  if (op.D != split.D_total || op.k_in != split.k || op.k_out != split.k)
    throw DomainError("block_decompose: operator does not act on the split space");
  BlockGrid g;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      RationalMatrix b(split.block_size[r], split.block_size[c]);
      for (std::size_t i = 0; i < split.members[r].size(); ++i)
        for (std::size_t j = 0; j < split.members[c].size(); ++j)
          b(i, j) = op.matrix(split.members[r][i], split.members[c][j]);
      g.block[r][c] = std::move(b);
    }
  return g;
}

RationalMatrix assemble_blocks(const BlockGrid& grid, const SplitBasis& split) {
  const std::size_t n = binomial(split.D_total, split.k);
  RationalMatrix m(n, n);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      const auto& b = grid.block[r][c];
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(split.members[r][i], split.members[c][j]) = b(i, j);
    }
  return m;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (b(p, q) != 0) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

RationalMatrix plane_star(int j) { return hodge_operator(2, j).matrix; }

Proportionality proportionality(const RationalMatrix& block, const RationalMatrix& named) {
  Proportionality p;
  if (block.rows() != named.rows() || block.cols() != named.cols()) return p;
  bool bz = block.is_zero(), nz = named.is_zero();
  if (bz && nz) {
    p.both_zero = true;
    return p;
  }
  if (nz) return p;
  bool found = false;
  for (std::size_t i = 0; i < named.rows() && !found; ++i)
    for (std::size_t j = 0; j < named.cols(); ++j)
      if (named(i, j) != 0) {
        p.lambda = block(i, j) / named(i, j);
        found = true;
        break;
      }
  p.proportional = block == p.lambda * named;
  return p;
}

}  // namespace formdual
