#include "formdual/duality.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "formdual/errors.hpp"
#include "formdual/parallel.hpp"

namespace formdual {

namespace {

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational contraction_prefactor(int l, int k_in, int p) {
  const int a = l - p, q = k_in - p;
  return factorial(p) * factorial(a) * factorial(q) / factorial(a + q);
}

struct SignedPerm {
  std::vector<int> p;
  int sign;
};

std::vector<SignedPerm> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPerm> out;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += p[i] > p[j];
    out.push_back({p, (inv & 1) ? -1 : 1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<int>> zero_based(const std::vector<MultiIndex>& B) {
  std::vector<std::vector<int>> out;
  out.reserve(B.size());
  for (const auto& I : B) {
    auto v = I.indices();
    for (auto& x : v) --x;
    out.push_back(std::move(v));
  }
  return out;
}

std::string entry_string(const std::vector<int>& a, const std::vector<int>& b) {
  std::ostringstream os;
  os << "(";
  for (int x : a) os << x + 1;
  os << ";";
  for (int x : b) os << x + 1;
  os << ")";
  return os.str();
}

}  // namespace

LinearOperator contraction_operator(const KForm& omega, int k_in, int p) {
  const int D = omega.dim(), l = omega.degree();
  if (p < 0 || p > l || p > k_in || k_in > D) throw DomainError("contraction: slot count out of range");
  const int k_out = l + k_in - 2 * p;
  if (k_out > D) throw DomainError("contraction: output degree exceeds dimension");
  const Rational pref = contraction_prefactor(l, k_in, p);
  LinearOperator op(D, k_in, k_out);
  const auto B = basis(D, k_in);
  std::vector<std::pair<std::uint32_t, Rational>> terms;
  for (const auto& [L, c] : omega.terms()) terms.emplace_back(L.bits(), pref * c);
  parallel_for(B.size(), [&](std::size_t col) {
    const std::uint32_t J = B[col].bits();
    for (const auto& [L, c] : terms) {
      const std::uint32_t common = L & J;
      if (std::popcount(common) < p) continue;
      // every p-subset S of the common support
      for (std::uint32_t S = common;; S = (S - 1) & common) {
        if (std::popcount(S) == p) {
          const std::uint32_t A = L & ~S, Bf = J & ~S;
          if (!(A & Bf)) {
            int s = shuffle_sign(S, A) * shuffle_sign(S, Bf) * shuffle_sign(A, Bf);
            Rational& x = op.matrix(basis_position(MultiIndex(D, A | Bf)), col);
            if (s > 0)
              x += c;
            else
              x -= c;
          }
        }
        if (S == 0) break;
      }
    }
  });
  return op;
}

KForm contract_direct(const KForm& omega, const KForm& F, int p) {
  const int D = omega.dim(), l = omega.degree(), k = F.degree();
  if (F.dim() != D) throw DomainError("contraction: ambient dimensions differ");
  if (p < 0 || p > l || p > k) throw DomainError("contraction: slot count out of range");
  KForm out(D, l + k - 2 * p);
  for (const auto& J : basis(D, p)) {
    KForm a = interior(J, omega);
    if (a.is_zero()) continue;
    KForm b = interior(J, F);
    if (b.is_zero()) continue;
    out += wedge(a, b);
  }
  out *= contraction_prefactor(l, k, p);
  return out;
}

DualityOperator build_duality_operator(const KForm& omega, int k) {
  const int D = omega.dim(), l = omega.degree();
  if (k < 0 || k > D) throw DomainError("duality operator: degree out of range");
  DualityOperator b;
  b.omega = omega;
  b.k = k;
  if (l % 2 != 0 || l / 2 > k) {
    b.m = l % 2 ? 0 : l / 2;
    b.degenerate = true;
    b.op = LinearOperator(D, k, k);
    return b;
  }
  b.m = l / 2;
  b.op = contraction_operator(omega, k, b.m);
  if (kKappa != 1) b.op.matrix *= kKappa;
  return b;
}

KForm apply(const DualityOperator& b, const KForm& F) { return b.op.apply(F); }

KForm apply_direct(const DualityOperator& b, const KForm& F) {
  if (F.dim() != b.op.D || F.degree() != b.k) throw DomainError("apply: form does not match operator domain");
  if (b.degenerate) return KForm(F.dim(), F.degree());
  KForm out = contract_direct(b.omega, F, b.m);
  out *= kKappa;
  return out;
}

const char* variant_name(ContractionVariant v) {
  switch (v) {
    case ContractionVariant::d: return "d";
    case ContractionVariant::d_tilde: return "d~";
    case ContractionVariant::c: return "c";
    case ContractionVariant::c_tilde: return "c~";
    case ContractionVariant::e: return "e";
    case ContractionVariant::e_tilde: return "e~";
  }
  return "?";
}

LinearOperator contraction_map(const KForm& theta, ContractionVariant v) {
  if (theta.dim() != 8 || theta.degree() != 4) throw DomainError("contraction map needs a 4-form on R^8");
  switch (v) {
    case ContractionVariant::d: return contraction_operator(theta, 5, 3);
    case ContractionVariant::d_tilde: return contraction_operator(theta, 3, 1);
    case ContractionVariant::c: return contraction_operator(theta, 4, 3);
    case ContractionVariant::c_tilde: return contraction_operator(theta, 2, 1);
    case ContractionVariant::e: return contraction_operator(theta, 3, 3);
    case ContractionVariant::e_tilde: return contraction_operator(theta, 1, 1);
  }
  throw DomainError("unknown contraction variant");
}

std::pair<LinearOperator, LinearOperator> order2_projections(const DualityOperator& b, const Rational& beta1,
                                                             const Rational& beta2) {
  if (beta1 == beta2) throw ContractViolation("order-two projections need distinct roots");
  const int D = b.op.D, k = b.k;
  LinearOperator id = identity_operator(D, k);
  LinearOperator x = b.op - beta1 * id, y = b.op - beta2 * id;
  if (!compose(x, y).matrix.is_zero()) throw ContractViolation("operator is not of order two with these roots");
  return {Rational(1 / (beta1 - beta2)) * y, Rational(1 / (beta2 - beta1)) * x};
}

namespace {

std::string first_difference(const RationalMatrix& a, const RationalMatrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j))
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + to_string(a(i, j)) + " vs " +
               to_string(b(i, j));
  return "";
}

}  // namespace

std::vector<IdentityCheck> hodge_compat_check(const KForm& omega, int k) {
  const int D = omega.dim(), l = omega.degree();
  if (l % 2 != 0) throw DomainError("hodge compatibility needs an even-degree form");
  const int m = l / 2;
  if (k < m || D - k < m) throw DomainError("duality operator undefined on Lambda^k or Lambda^(D-k)");
  std::vector<IdentityCheck> out;
  {
    auto bk = build_duality_operator(omega, k).op;
    auto bdk = build_duality_operator(omega, D - k).op;
    LinearOperator lhs = compose(hodge_operator(D, D - k), compose(bdk, hodge_operator(D, k)));
    lhs.matrix *= Rational(binomial(D - k, m));
    Rational s = binomial(k, m);
    if ((k * (D - k)) % 2) s = -s;
    LinearOperator rhs = s * bk;
    IdentityCheck c{"hodge conjugation scaling on degree " + std::to_string(k), lhs.matrix == rhs.matrix, ""};
    if (!c.holds) c.detail = first_difference(lhs.matrix, rhs.matrix);
    out.push_back(c);
  }
  if (D == 4 * m && k == 2 * m) {
    auto b = build_duality_operator(omega, k).op;
    auto bstar = build_duality_operator(hodge_star(omega), k).op;
    auto star = hodge_operator(D, k);
    RationalMatrix sb = (star.matrix * b.matrix), bs = (b.matrix * star.matrix);
    IdentityCheck c1{"star after b equals b of star-omega", sb == bstar.matrix, ""};
    if (!c1.holds) c1.detail = first_difference(sb, bstar.matrix);
    IdentityCheck c2{"star after b equals b after star", sb == bs, ""};
    if (!c2.holds) c2.detail = first_difference(sb, bs);
    out.push_back(c1);
    out.push_back(c2);
  }
  return out;
}

ComponentTable::ComponentTable(const KForm& F) : D_(F.dim()), k_(F.degree()) {
  std::size_t n = 1;
  for (int i = 0; i < k_; ++i) n *= D_;
  v_.assign(n, Rational(0));
  auto perms = permutations(k_);
  for (const auto& [I, c] : F.terms()) {
    auto idx = I.indices();
    for (const auto& sp : perms) {
      std::size_t pos = 0;
      for (int s = 0; s < k_; ++s) pos = pos * D_ + (idx[sp.p[s]] - 1);
      v_[pos] = sp.sign > 0 ? c : Rational(-c);
    }
  }
}

const Rational& ComponentTable::operator()(const int* idx) const {
  std::size_t pos = 0;
  for (int s = 0; s < k_; ++s) pos = pos * D_ + idx[s];
  return v_[pos];
}

const Rational& ComponentTable::at(std::initializer_list<int> idx) const { return (*this)(idx.begin()); }

std::vector<IdentityCheck> theta_trace_identities(const KForm& theta) {
  std::vector<IdentityCheck> out{{"one-fold contraction", false, ""},
                                 {"two-fold contraction", false, ""},
                                 {"three-fold contraction", false, ""},
                                 {"full contraction equals 336", false, ""}};
  if (theta.degree() != 4) {
    for (auto& c : out) c.detail = "not a 4-form";
    return out;
  }
  const int D = theta.dim();
  ComponentTable T(theta);
  auto delta = [](int a, int b) { return a == b ? 1 : 0; };
  auto p3 = permutations(3);

  // 1-fold: T_ijko T_lmno = 6 delta^{lmn}_{ijk} - 9 T_[ij^[lm delta_k]^n]
  {
    bool ok = true;
    for (const auto& I : zero_based(basis(D, 3))) {
      for (const auto& L : zero_based(basis(D, 3))) {
        Rational lhs = 0;
        for (int o = 0; o < D; ++o) lhs += T.at({I[0], I[1], I[2], o}) * T.at({L[0], L[1], L[2], o});
        Rational gd = 0, br = 0;
        for (const auto& s : p3) {
          gd += s.sign * delta(I[0], L[s.p[0]]) * delta(I[1], L[s.p[1]]) * delta(I[2], L[s.p[2]]);
          for (const auto& t : p3) {
            const int* a = I.data();
            const int* b = L.data();
            if (a[s.p[2]] != b[t.p[2]]) continue;
            const Rational& v = T.at({a[s.p[0]], a[s.p[1]], b[t.p[0]], b[t.p[1]]});
            if (s.sign * t.sign > 0)
              br += v;
            else
              br -= v;
          }
        }
        Rational rhs = Rational(gd) - Rational(1, 4) * br;  // 6 (1/6) gd - 9 (1/36) br
        if (lhs != rhs) {
          ok = false;
          out[0].detail = entry_string(I, L) + ": " + to_string(lhs) + " vs " + to_string(rhs);
          break;
        }
      }
      if (!ok) break;
    }
    out[0].holds = ok;
  }
  // 2-fold: T_ijmn T_klmn = 12 delta^{kl}_{ij} - 4 T_ijkl
  {
    bool ok = true;
    for (const auto& I : zero_based(basis(D, 2))) {
      for (const auto& K : zero_based(basis(D, 2))) {
        Rational lhs = 0;
        for (int m = 0; m < D; ++m)
          for (int n = 0; n < D; ++n) lhs += T.at({I[0], I[1], m, n}) * T.at({K[0], K[1], m, n});
        Rational gd = Rational(delta(I[0], K[0]) * delta(I[1], K[1]) - delta(I[0], K[1]) * delta(I[1], K[0]), 2);
        Rational rhs = 12 * gd - 4 * T.at({I[0], I[1], K[0], K[1]});
        if (lhs != rhs) {
          ok = false;
          out[1].detail = entry_string(I, K) + ": " + to_string(lhs) + " vs " + to_string(rhs);
          break;
        }
      }
      if (!ok) break;
    }
    out[1].holds = ok;
  }
  // 3-fold: T_iklm T_jklm = 42 delta_ij
  {
    bool ok = true;
    for (int i = 0; i < D && ok; ++i)
      for (int j = 0; j < D; ++j) {
        Rational lhs = 0;
        for (int k = 0; k < D; ++k)
          for (int l = 0; l < D; ++l)
            for (int m = 0; m < D; ++m) lhs += T.at({i, k, l, m}) * T.at({j, k, l, m});
        Rational rhs = 42 * delta(i, j);
        if (lhs != rhs) {
          ok = false;
          out[2].detail = entry_string({i}, {j}) + ": " + to_string(lhs) + " vs " + to_string(rhs);
          break;
        }
      }
    out[2].holds = ok;
  }
  // full contraction over all ordered tuples
  {
    Rational s = 0;
    int idx[4];
    for (idx[0] = 0; idx[0] < D; ++idx[0])
      for (idx[1] = 0; idx[1] < D; ++idx[1])
        for (idx[2] = 0; idx[2] < D; ++idx[2])
          for (idx[3] = 0; idx[3] < D; ++idx[3]) {
            const Rational& v = T(idx);
            if (v != 0) s += v * v;
          }
    out[3].holds = s == 336;
    out[3].detail = "full contraction = " + to_string(s);
  }
  return out;
}

SquaredDecomposition theta_squared_decomposition(const KForm& theta) {
  SquaredDecomposition res;
  if (theta.degree() != 4) throw DomainError("squared decomposition needs a 4-form");
  const int D = theta.dim();
  // integer table: theta = T / L
  mpz_class L = 1;
  for (const auto& [I, c] : theta.terms()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  ComponentTable R(theta);
  std::vector<mpz_class> T(D * D * D * D);
  for (int i = 0; i < D * D * D * D; ++i) {
    int idx[4] = {i / (D * D * D), (i / (D * D)) % D, (i / D) % D, i % D};
    T[i] = Rational(R(idx) * L).get_num();
  }
  auto t = [&](int a, int b, int c, int d) -> const mpz_class& { return T[((a * D + b) * D + c) * D + d]; };
  const auto B = zero_based(basis(D, 4));
  const auto perms = permutations(4);
  const std::size_t n = B.size();
  // rows: (I, J) slots; columns: term1, term2, term3, lhs  (all scaled by 576 L^2)
  RationalMatrix sys(n * n, 4);
  const mpz_class L2 = L * L;
  parallel_for(n, [&](std::size_t ii) {
    const auto& I = B[ii];
    for (std::size_t jj = 0; jj < n; ++jj) {
      const auto& J = B[jj];
      mpz_class s1 = 0, s2 = 0, s3 = 0;
      for (const auto& sp : perms) {
        const int a0 = I[sp.p[0]], a1 = I[sp.p[1]], a2 = I[sp.p[2]], a3 = I[sp.p[3]];
        for (const auto& tp : perms) {
          const int c0 = J[tp.p[0]], c1 = J[tp.p[1]], c2 = J[tp.p[2]], c3 = J[tp.p[3]];
          const int sg = sp.sign * tp.sign;
          if (a2 == c2 && a3 == c3) {
            if (sg > 0)
              s1 += t(a0, a1, c0, c1);
            else
              s1 -= t(a0, a1, c0, c1);
          }
          mpz_class p2 = t(a0, a1, a2, c0) * t(a3, c1, c2, c3);
          mpz_class p3 = t(a0, a1, c0, c1) * t(a2, a3, c2, c3);
          if (sg > 0) {
            s2 += p2;
            s3 += p3;
          } else {
            s2 -= p2;
            s3 -= p3;
          }
        }
      }
      const std::size_t row = ii * n + jj;
      sys(row, 0) = Rational(s1 * L) / Rational(576 * L2);  // linear in theta
      sys(row, 1) = Rational(s2) / Rational(576 * L2);
      sys(row, 2) = Rational(s3) / Rational(576 * L2);
      sys(row, 3) = Rational(t(I[0], I[1], I[2], I[3]) * t(J[0], J[1], J[2], J[3])) / Rational(L2);
    }
  });
  RrefResult r = rref(sys);
  res.consistent = std::find(r.pivots.begin(), r.pivots.end(), 3) == r.pivots.end();
  if (!res.consistent) return res;
  Rational x[3] = {0, 0, 0};
  for (std::size_t p = 0; p < r.rank; ++p) x[r.pivots[p]] = r.reduced(p, 3);
  res.a = x[0];
  res.b = x[1];
  res.c = x[2];
  bool zero = true;
  for (std::size_t row = 0; row < sys.rows() && zero; ++row)
    zero = sys(row, 0) * x[0] + sys(row, 1) * x[1] + sys(row, 2) * x[2] == sys(row, 3);
  res.residual_zero = zero;
  return res;
}

LinearOperator tensor_expression_operator(int D, int k_in, int k_out, const TensorKernel& kernel) {
  LinearOperator op(D, k_in, k_out);
  const auto Bin = zero_based(basis(D, k_in));
  const auto Bout = zero_based(basis(D, k_out));
  const auto pin = permutations(k_in);
  const auto pout = permutations(k_out);
  const Rational w = 1 / factorial(k_out);
  parallel_for(Bout.size(), [&](std::size_t row) {
    std::vector<int> o(k_out), in(k_in);
    for (std::size_t col = 0; col < Bin.size(); ++col) {
      Rational s = 0;
      for (const auto& sp : pout) {
        for (int q = 0; q < k_out; ++q) o[q] = Bout[row][sp.p[q]];
        for (const auto& tp : pin) {
          for (int q = 0; q < k_in; ++q) in[q] = Bin[col][tp.p[q]];
          Rational v = kernel(o.data(), in.data());
          if (v == 0) continue;
          if (sp.sign * tp.sign > 0)
            s += v;
          else
            s -= v;
        }
      }
      if (s != 0) op.matrix(row, col) = s * w;
    }
  });
  return op;
}

}  // namespace formdual
