#include "formdual/matrix.hpp"

#include "formdual/errors.hpp"

namespace formdual {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::column(std::size_t j) const {
  RationalVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void RationalMatrix::set_column(std::size_t j, const RationalVector& v) {
  if (v.size() != rows_) throw DomainError("set_column: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : a_) n += (x != 0);
  return n;
}

Rational RationalMatrix::trace() const {
  if (!is_square()) throw DomainError("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DomainError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (o.a_[i] != 0) a_[i] += o.a_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DomainError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (o.a_[i] != 0) a_[i] -= o.a_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& x : a_)
    if (x != 0) x *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  mpq_class t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Rational& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(l, j);
        if (y == 0) continue;
        mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        mpq_add(c(i, j).get_mpq_t(), c(i, j).get_mpq_t(), t.get_mpq_t());
      }
    }
  return c;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols_ != v.size()) throw DomainError("matrix-vector product: shape mismatch");
  RationalVector out(a.rows_);
  mpq_class t;
  for (std::size_t j = 0; j < a.cols_; ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      const Rational& x = a(i, j);
      if (x == 0) continue;
      mpq_mul(t.get_mpq_t(), x.get_mpq_t(), v[j].get_mpq_t());
      mpq_add(out[i].get_mpq_t(), out[i].get_mpq_t(), t.get_mpq_t());
    }
  }
  return out;
}

SparseMatrix::SparseMatrix(const RationalMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
  start_.reserve(rows_ + 1);
  start_.push_back(0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (m(i, j) != 0) {
        col_.push_back(j);
        val_.push_back(m(i, j));
      }
    start_.push_back(col_.size());
  }
}

RationalVector SparseMatrix::operator*(const RationalVector& v) const {
  if (v.size() != cols_) throw DomainError("sparse product: shape mismatch");
  RationalVector out(rows_);
  mpq_class t;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t p = start_[i]; p < start_[i + 1]; ++p) {
      const Rational& x = v[col_[p]];
      if (x == 0) continue;
      mpq_mul(t.get_mpq_t(), val_[p].get_mpq_t(), x.get_mpq_t());
      mpq_add(out[i].get_mpq_t(), out[i].get_mpq_t(), t.get_mpq_t());
    }
  return out;
}

namespace {

// Gaussian elimination in place. full = reduce above pivots too (rref); otherwise row echelon only.
std::vector<std::size_t> eliminate(RationalMatrix& a, bool full) {
  const std::size_t R = a.rows(), C = a.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  mpq_class t, inv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    // sparsest candidate row keeps fill-in down
    std::size_t best = R, best_count = 0;
    for (std::size_t i = r; i < R; ++i) {
      if (a(i, c) == 0) continue;
      std::size_t cnt = 0;
      for (std::size_t j = c; j < C; ++j) cnt += (a(i, j) != 0);
      if (best == R || cnt < best_count) {
        best = i;
        best_count = cnt;
      }
    }
    if (best == R) continue;
    if (best != r)
      for (std::size_t j = c; j < C; ++j) mpq_swap(a(best, j).get_mpq_t(), a(r, j).get_mpq_t());
    inv = 1 / a(r, c);
    nz.clear();
    for (std::size_t j = c; j < C; ++j)
      if (a(r, j) != 0) {
        a(r, j) *= inv;
        nz.push_back(j);
      }
    for (std::size_t i = full ? 0 : r + 1; i < R; ++i) {
      if (i == r || a(i, c) == 0) continue;
      mpq_class f = a(i, c);
      for (std::size_t j : nz) {
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), a(r, j).get_mpq_t());
        mpq_sub(a(i, j).get_mpq_t(), a(i, j).get_mpq_t(), t.get_mpq_t());
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const RationalMatrix& m) {
  RrefResult res{m, 0, {}};
  res.pivots = eliminate(res.reduced, true);
  res.rank = res.pivots.size();
  return res;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return eliminate(a, false).size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<RationalVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t row = 0; row < r.rank; ++row) v[r.pivots[row]] = -r.reduced(row, f);
    out.push_back(std::move(v));
  }
  return out;
}

RationalMatrix from_columns(std::size_t rows, const std::vector<RationalVector>& cols) {
  RationalMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Restriction restrict_to(const RationalMatrix& m, const std::vector<RationalVector>& basis) {
  const std::size_t n = m.rows(), r = basis.size();
  RationalMatrix aug(n, 2 * r);
  for (std::size_t j = 0; j < r; ++j) {
    RationalVector mv = m * basis[j];
    for (std::size_t i = 0; i < n; ++i) {
      aug(i, j) = basis[j][i];
      aug(i, r + j) = mv[i];
    }
  }
  RrefResult red = rref(aug);
  Restriction res;
  for (std::size_t p = 0; p < red.rank; ++p)
    if (red.pivots[p] != p) throw ContractViolation("restrict_to: basis vectors are dependent");
  res.invariant = red.rank == r;
  if (!res.invariant) return res;
  res.matrix = RationalMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) res.matrix(i, j) = red.reduced(i, r + j);
  return res;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RationalVector scaled(const RationalVector& v, const Rational& s) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out[i] = v[i] * s;
  return out;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DomainError("vector sum: length mismatch");
  RationalVector out(a);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) out[i] += b[i];
  return out;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DomainError("vector difference: length mismatch");
  RationalVector out(a);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) out[i] -= b[i];
  return out;
}

bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v) {
  if (basis.empty()) return is_zero(v);
  std::vector<RationalVector> cols = basis;
  std::size_t r0 = rank(from_columns(v.size(), cols));
  cols.push_back(v);
  return rank(from_columns(v.size(), cols)) == r0;
}

}  // namespace formdual
