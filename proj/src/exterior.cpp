#include "formdual/exterior.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "formdual/errors.hpp"

namespace formdual {

namespace {

struct BinomialTable {
  std::array<std::array<std::uint64_t, 33>, 33> c{};
  BinomialTable() {
    for (int n = 0; n <= 32; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

void check_dim(int D) {
  if (D < 0 || D > kMaxDim) throw DomainError("ambient dimension out of range");
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return table().c[n][k];
}

MultiIndex::MultiIndex(int D, std::uint32_t bits) : D_(D), bits_(bits) {
  check_dim(D);
  if (D < 32 && (bits >> D) != 0) throw DomainError("index exceeds ambient dimension");
}

MultiIndex MultiIndex::from_indices(int D, const std::vector<int>& sorted) {
  std::uint32_t bits = 0;
  int prev = 0;
  for (int i : sorted) {
    if (i <= prev || i > D) throw DomainError("multi-index must be strictly increasing in 1..D");
    bits |= 1u << (i - 1);
    prev = i;
  }
  return MultiIndex(D, bits);
}

int MultiIndex::degree() const { return std::popcount(bits_); }

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

bool operator<(const MultiIndex& a, const MultiIndex& b) {
  if (a.D_ != b.D_) return a.D_ < b.D_;
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  std::uint32_t x = a.bits_ ^ b.bits_;
  if (!x) return false;
  // first difference of two equal-length sorted tuples is the least element of the symmetric difference
  return (a.bits_ & (x & (~x + 1))) != 0;
}

std::vector<MultiIndex> basis(int D, int k) {
  check_dim(D);
  if (k < 0 || k > D) throw DomainError("basis: degree out of range");
  std::vector<MultiIndex> out;
  out.reserve(binomial(D, k));
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(MultiIndex::from_indices(D, idx));
    int p = k - 1;
    while (p >= 0 && idx[p] == D - k + p + 1) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

std::size_t basis_position(const MultiIndex& I) {
  const int D = I.dim();
  const int k = I.degree();
  std::size_t rank = 0;
  int prev = 0, s = 0;
  for (int i : I.indices()) {
    ++s;
    for (int j = prev + 1; j < i; ++j) rank += binomial(D - j, k - s);
    prev = i;
  }
  return rank;
}

int shuffle_sign(std::uint32_t A, std::uint32_t B) {
  int inv = 0;
  for (std::uint32_t a = A; a; a &= a - 1) {
    std::uint32_t low = (a & (~a + 1)) - 1;
    inv += std::popcount(B & low);
  }
  return (inv & 1) ? -1 : 1;
}

std::optional<std::pair<MultiIndex, Rational>> normalize_component(int D, const std::vector<int>& indices,
                                                                   const Rational& coeff) {
  std::uint32_t bits = 0;
  int inv = 0;
  for (std::size_t p = 0; p < indices.size(); ++p) {
    int i = indices[p];
    if (i < 1 || i > D) throw DomainError("index out of range");
    std::uint32_t bit = 1u << (i - 1);
    if (bits & bit) return std::nullopt;
    inv += std::popcount(bits & ~((bit << 1) - 1));  // earlier entries larger than i
    bits |= bit;
  }
  if (coeff == 0) return std::nullopt;
  Rational c = (inv & 1) ? Rational(-coeff) : coeff;
  return std::make_pair(MultiIndex(D, bits), c);
}

KForm::KForm(int D, int k) : D_(D), k_(k) {
  check_dim(D);
  if (k < 0 || k > D) throw DomainError("form degree out of range");
}

Rational KForm::coeff(const MultiIndex& I) const {
  auto it = coeffs_.find(I);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational KForm::component(const std::vector<int>& indices) const {
  if (static_cast<int>(indices.size()) != k_) throw DomainError("component: wrong number of indices");
  auto n = normalize_component(D_, indices, 1);
  if (!n) return 0;
  return n->second * coeff(n->first);
}

void KForm::add(const MultiIndex& I, const Rational& c) {
  if (I.dim() != D_ || I.degree() != k_) throw DomainError("KForm::add: index shape mismatch");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(I, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void KForm::add_component(const std::vector<int>& indices, const Rational& c) {
  if (static_cast<int>(indices.size()) != k_) throw DomainError("add_component: wrong number of indices");
  if (auto n = normalize_component(D_, indices, c)) add(n->first, n->second);
}

KForm& KForm::operator+=(const KForm& o) {
  if (o.D_ != D_ || o.k_ != k_) throw DomainError("KForm sum: shape mismatch");
  for (const auto& [I, c] : o.coeffs_) add(I, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& o) {
  if (o.D_ != D_ || o.k_ != k_) throw DomainError("KForm difference: shape mismatch");
  for (const auto& [I, c] : o.coeffs_) add(I, -c);
  return *this;
}

KForm& KForm::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [I, c] : coeffs_) c *= s;
  return *this;
}

std::vector<Rational> KForm::to_vector() const {
  std::vector<Rational> v(binomial(D_, k_));
  for (const auto& [I, c] : coeffs_) v[basis_position(I)] = c;
  return v;
}

KForm KForm::from_vector(int D, int k, const std::vector<Rational>& v) {
  KForm F(D, k);
  if (v.size() != binomial(D, k)) throw DomainError("from_vector: length mismatch");
  auto B = basis(D, k);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) F.coeffs_.emplace(B[i], v[i]);
  return F;
}

KForm basis_form(int D, const std::vector<int>& indices) {
  KForm F(D, static_cast<int>(indices.size()));
  F.add_component(indices, 1);
  return F;
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw DomainError("wedge: ambient dimensions differ");
  const int D = a.dim();
  const int k = a.degree() + b.degree();
  if (k > D) return KForm(D, D);  // degree overflow: zero (top degree used as placeholder)
  KForm out(D, k);
  for (const auto& [A, ca] : a.terms())
    for (const auto& [B, cb] : b.terms()) {
      if (A.bits() & B.bits()) continue;
      Rational c = ca * cb;
      if (shuffle_sign(A.bits(), B.bits()) < 0) c = -c;
      out.add(MultiIndex(D, A.bits() | B.bits()), c);
    }
  return out;
}

KForm hodge_star(const KForm& F) {
  const int D = F.dim();
  const std::uint32_t full = D == 32 ? ~0u : ((1u << D) - 1);
  KForm out(D, D - F.degree());
  for (const auto& [I, c] : F.terms()) {
    std::uint32_t comp = full & ~I.bits();
    out.add(MultiIndex(D, comp), shuffle_sign(I.bits(), comp) < 0 ? Rational(-c) : c);
  }
  return out;
}

Rational inner_product(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) throw DomainError("inner_product: shape mismatch");
  Rational s = 0;
  for (const auto& [I, c] : a.terms()) {
    auto it = b.terms().find(I);
    if (it != b.terms().end()) s += c * it->second;
  }
  return s;
}

KForm interior(const MultiIndex& J, const KForm& F) {
  if (J.dim() != F.dim()) throw DomainError("interior: ambient dimensions differ");
  if (J.degree() > F.degree()) return KForm(F.dim(), 0);
  KForm out(F.dim(), F.degree() - J.degree());
  for (const auto& [L, c] : F.terms()) {
    if ((L.bits() & J.bits()) != J.bits()) continue;
    std::uint32_t A = L.bits() & ~J.bits();
    out.add(MultiIndex(F.dim(), A), shuffle_sign(J.bits(), A) < 0 ? Rational(-c) : c);
  }
  return out;
}

}  // namespace formdual
