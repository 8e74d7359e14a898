#pragma once

#include <cstddef>
#include <vector>

#include "formdual/rational.hpp"

namespace formdual {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RationalVector column(std::size_t j) const;
  void set_column(std::size_t j, const RationalVector& v);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  std::size_t nonzeros() const;
  Rational trace() const;
  RationalMatrix transpose() const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& s);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& v);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Row-compressed copy for repeated products.
class SparseMatrix {
 public:
  explicit SparseMatrix(const RationalMatrix& m);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RationalVector operator*(const RationalVector& v) const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> col_;
  std::vector<Rational> val_;
};

struct RrefResult {
  RationalMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

// Matrix with the given vectors as columns.
RationalMatrix from_columns(std::size_t rows, const std::vector<RationalVector>& cols);

// C with M B = B C for a basis B (columns) of an M-invariant subspace; nullopt if not invariant.
// B must have independent columns.
struct Restriction {
  bool invariant = false;
  RationalMatrix matrix;
};
Restriction restrict_to(const RationalMatrix& m, const std::vector<RationalVector>& basis);

bool is_zero(const RationalVector& v);
RationalVector scaled(const RationalVector& v, const Rational& s);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector sub(const RationalVector& a, const RationalVector& b);
bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v);

}  // namespace formdual
