#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "formdual/rational.hpp"

namespace formdual {

constexpr int kMaxDim = 16;

// Strictly increasing index tuple in 1..D, stored as a bit set (bit i-1 <-> index i).
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(int D, std::uint32_t bits);
  static MultiIndex from_indices(int D, const std::vector<int>& sorted);

  int dim() const { return D_; }
  int degree() const;
  std::uint32_t bits() const { return bits_; }
  std::vector<int> indices() const;
  bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }

  // lexicographic on the index tuples; degree first if degrees differ
  friend bool operator<(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.D_ == b.D_ && a.bits_ == b.bits_;
  }

 private:
  int D_ = 0;
  std::uint32_t bits_ = 0;
};

std::vector<MultiIndex> basis(int D, int k);
std::uint64_t binomial(int n, int k);
// position of I in basis(D, deg I)
std::size_t basis_position(const MultiIndex& I);

// Sign (+1/-1) of the permutation sorting the concatenation (A, B); A and B disjoint.
int shuffle_sign(std::uint32_t A, std::uint32_t B);

std::optional<std::pair<MultiIndex, Rational>> normalize_component(int D, const std::vector<int>& indices,
                                                                   const Rational& coeff);

class KForm {
 public:
  KForm() = default;
  KForm(int D, int k);

  int dim() const { return D_; }
  int degree() const { return k_; }
  const std::map<MultiIndex, Rational>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coeff(const MultiIndex& I) const;
  // component for an arbitrary (unsorted, possibly repeating) index sequence
  Rational component(const std::vector<int>& indices) const;
  void add(const MultiIndex& I, const Rational& c);
  void add_component(const std::vector<int>& indices, const Rational& c);

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  KForm& operator*=(const Rational& s);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const Rational& s, KForm a) { return a *= s; }
  friend bool operator==(const KForm& a, const KForm& b) {
    return a.D_ == b.D_ && a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
  }

  // dense coordinate vector in basis(D, k) order, and back
  std::vector<Rational> to_vector() const;
  static KForm from_vector(int D, int k, const std::vector<Rational>& v);

 private:
  int D_ = 0;
  int k_ = 0;
  std::map<MultiIndex, Rational> coeffs_;
};

KForm basis_form(int D, const std::vector<int>& indices);
KForm wedge(const KForm& a, const KForm& b);
KForm hodge_star(const KForm& F);
Rational inner_product(const KForm& a, const KForm& b);
// (i_J F)_A = F_{J A}: contraction on the leading slots with the sorted tuple J
KForm interior(const MultiIndex& J, const KForm& F);

}  // namespace formdual
