#include "formdual/discrete_symmetry.hpp"

#include <mutex>

#include "formdual/catalog.hpp"
#include "formdual/errors.hpp"
#include "formdual/minimal_polynomial.hpp"

namespace formdual {

LinearOperator sigma_operator(int a, int k) {
  if (a < 0 || a >= 8 || k < 0 || k > 8) throw DomainError("sigma: shift or degree out of range");
  LinearOperator op(8, k, k);
  const auto B = basis(8, k);
  for (std::size_t j = 0; j < B.size(); ++j) {
    std::vector<int> idx = B[j].indices();
    for (auto& i : idx) i = (i + a - 1) % 8 + 1;
    auto n = normalize_component(8, idx, 1);
    op.matrix(basis_position(n->first), j) = n->second;
  }
  return op;
}

std::map<std::string, std::size_t> cyclic_multiplicities(const RationalMatrix& s) {
  const std::size_t n = s.rows();
  auto kdim = [&](const RationalPolynomial& p) { return n - rank(poly_eval_matrix(p, s)); };
  return {{"1", kdim(RationalPolynomial({-1, 1}))},
          {"-1", kdim(RationalPolynomial({1, 1}))},
          {"i", kdim(RationalPolynomial({1, 0, 1})) / 2},
          {"-i", kdim(RationalPolynomial({1, 0, 1})) / 2},
          {"primitive", kdim(RationalPolynomial({1, 0, 0, 0, 1})) / 4}};
}

std::map<std::string, std::size_t> sigma_multiplicities(int k) {
  if (k < 2 || k > 4) throw DomainError("sigma multiplicities are tabulated for k = 2, 3, 4");
  return cyclic_multiplicities(sigma_operator(1, k).matrix);
}

RationalPolynomial restricted_minimal_equation(const LinearOperator& sigma, const std::vector<RationalVector>& subspace) {
  if (subspace.empty()) return RationalPolynomial::constant(1);
  Restriction r = restrict_to(sigma.matrix, subspace);
  if (!r.invariant) throw ContractViolation("subspace is not invariant");
  return minimal_polynomial(r.matrix);
}

int z8_prefactor(int k) {
  switch (k) {
    case 2: return 1;
    case 3: return 3;
    case 4: return 6;
  }
  throw DomainError("cyclic form: k must be 2, 3 or 4");
}

namespace {

RationalPolynomial P(std::vector<Rational> c) { return RationalPolynomial(std::move(c)); }
const RationalPolynomial t_ = P({0, 1});

}  // namespace

std::vector<RationalPolynomial> z8_stated_factors(int k) {
  switch (k) {
    case 2: return {t_, P({-1, 0, 1}), P({-4, 0, 1}), P({-2, 0, 1}), P({1, 0, -6, 0, 1})};
    case 3: return {t_, P({-4, 0, 1}), P({-2, 0, 1}), P({16, 0, -14, 0, 1})};
    case 4: return {t_, P({-4, 0, 1}), P({-16, 0, 1}), P({-8, 0, 1})};
  }
  throw DomainError("cyclic form: k must be 2, 3 or 4");
}

std::optional<Rational> rational_root_n(const Rational& q, int n) {
  if (n < 1) return std::nullopt;
  if (q == 0) return Rational(0);
  if (q < 0 && n % 2 == 0) return std::nullopt;
  mpz_class a = abs(q.get_num()), b = q.get_den(), ra, rb;
  if (!mpz_root(ra.get_mpz_t(), a.get_mpz_t(), n) || !mpz_root(rb.get_mpz_t(), b.get_mpz_t(), n)) return std::nullopt;
  Rational r(ra, rb);
  r.canonicalize();
  return q < 0 ? Rational(-r) : r;
}

std::optional<Rational> fit_uniform_scalar(
    const std::vector<std::pair<RationalPolynomial, RationalPolynomial>>& pairs) {
  std::optional<Rational> s;
  for (const auto& [q0, p0] : pairs) {
    RationalPolynomial q = q0.monic(), p = p0.monic();
    const int n = p.degree();
    if (q.degree() != n) return std::nullopt;
    std::optional<Rational> cand;
    for (int j = 1; j <= n && !cand; ++j) {
      if (p.coeff(n - j) == 0) {
        if (q.coeff(n - j) != 0) return std::nullopt;
        continue;
      }
      cand = rational_root_n(q.coeff(n - j) / p.coeff(n - j), j);
      if (!cand) return std::nullopt;
    }
    if (!cand) cand = Rational(1);  // p = t^n
    // q(t) = s^n p(t/s)
    auto matches = [&](const Rational& x) { return x != 0 && q == p.rescale(1 / x).monic(); };
    if (!matches(*cand)) {
      if (matches(-*cand))
        cand = -*cand;
      else
        return std::nullopt;
    }
    // symmetric spectra admit both signs; prefer the positive scalar
    if (*cand < 0 && matches(-*cand)) cand = -*cand;
    if (!s) {
      s = cand;
    } else if (*s != *cand) {
      if (matches(*s)) continue;
      return std::nullopt;
    }
  }
  return s;
}

std::optional<Rational> z8_scalar() {
  static std::once_flag once;
  static std::optional<Rational> value;
  std::call_once(once, [] {
    std::vector<std::pair<RationalPolynomial, RationalPolynomial>> pairs;
    for (int k = 2; k <= 4; ++k) {
      auto b = build_duality_operator(z8_four_form(), k).op;
      RationalMatrix m = Rational(z8_prefactor(k)) * b.matrix;
      pairs.emplace_back(minimal_polynomial(m), product(z8_stated_factors(k)));
    }
    value = fit_uniform_scalar(pairs);
  });
  return value;
}

LinearOperator z8_normalized_operator(int k, const Rational& s) {
  auto b = build_duality_operator(z8_four_form(), k).op;
  return Rational(Rational(z8_prefactor(k)) / s) * b;
}

namespace {

std::vector<RationalVector> kernel_of(const RationalPolynomial& p, const LinearOperator& op) {
  return kernel_basis(poly_eval_matrix(p, op.matrix));
}

const RationalPolynomial& cyc(int which) {
  static const RationalPolynomial c1 = P({-1, 1}), c2 = P({1, 1}), c4 = P({1, 0, 1}), c8 = P({1, 0, 0, 0, 1});
  switch (which) {
    case 1: return c1;
    case 2: return c2;
    case 4: return c4;
    default: return c8;
  }
}

RestrictedEquation restricted(const std::string& label, const std::vector<RationalVector>& W,
                              const LinearOperator& sigma, const RationalPolynomial& expected,
                              const std::map<std::string, std::size_t>& expected_mults = {}) {
  RestrictedEquation e;
  e.label = label;
  e.dim = W.size();
  e.expected = expected.monic();
  if (W.empty()) {
    e.note = "empty subspace";
    return e;
  }
  Restriction r = restrict_to(sigma.matrix, W);
  e.invariant = r.invariant;
  if (!r.invariant) {
    e.note = "subspace not sigma-invariant";
    return e;
  }
  e.computed = minimal_polynomial(r.matrix);
  e.multiplicities = cyclic_multiplicities(r.matrix);
  e.holds = e.computed == e.expected;
  if (!expected_mults.empty() && e.multiplicities != expected_mults) {
    e.holds = false;
    e.note = "restricted sigma multiplicities differ";
  }
  return e;
}

std::map<std::string, std::size_t> mults(std::size_t one, std::size_t i, std::size_t prim) {
  return {{"1", one}, {"-1", one}, {"i", i}, {"-i", i}, {"primitive", prim}};
}

}  // namespace

std::vector<RestrictedEquation> z8_restricted_equations(int k, const LinearOperator& bhat) {
  const LinearOperator sigma = sigma_operator(1, k);
  std::vector<RestrictedEquation> out;
  auto lin = [](int r) { return P({-r, 1}); };
  const RationalPolynomial t8m1 = P({-1, 0, 0, 0, 0, 0, 0, 0, 1});
  const RationalPolynomial t4m1 = P({-1, 0, 0, 0, 1});
  switch (k) {
    case 2: {
      out.push_back(restricted("V_0", kernel_of(t_, bhat), sigma, cyc(8) * cyc(4)));
      out.push_back(restricted("V_+1", kernel_of(lin(1), bhat), sigma, cyc(8)));
      out.push_back(restricted("V_-1", kernel_of(lin(-1), bhat), sigma, cyc(8)));
      out.push_back(restricted("V_+2", kernel_of(lin(2), bhat), sigma, P({1, 1})));
      out.push_back(restricted("V_-2", kernel_of(lin(-2), bhat), sigma, P({-1, 1})));
      {
        auto W = kernel_of(P({-2, 0, 1}), bhat);
        auto e = restricted("V_+-sqrt2", W, sigma, cyc(8));
        // sign-split statement sigma^2 + b sigma + 1 = 0, rational because b acts as +-sqrt2 on the two halves
        bool split = true;
        for (const auto& w : W) {
          RationalVector sw = sigma.matrix * w;
          RationalVector lhs = add(add(sigma.matrix * sw, bhat.matrix * sw), w);
          split = split && is_zero(lhs);
        }
        e.holds = e.holds && split;
        e.note = split ? "sigma^2 + b sigma + 1 = 0 on the family" : "sigma^2 + b sigma + 1 != 0 on the family";
        out.push_back(e);
      }
      out.push_back(restricted("V_{1+-sqrt2}", kernel_of(P({-1, -2, 1}), bhat), sigma, P({-1, 0, 1})));
      out.push_back(restricted("V_{-1+-sqrt2}", kernel_of(P({-1, 2, 1}), bhat), sigma, P({1, 0, 1})));
      break;
    }
    case 3: {
      out.push_back(restricted("V_0", kernel_of(t_, bhat), sigma, t8m1));
      out.push_back(restricted("V_+2", kernel_of(lin(2), bhat), sigma, t8m1));
      out.push_back(restricted("V_-2", kernel_of(lin(-2), bhat), sigma, t8m1));
      out.push_back(restricted("V_+-sqrt2", kernel_of(P({-2, 0, 1}), bhat), sigma, cyc(8)));
      out.push_back(restricted("V_quartic", kernel_of(P({16, 0, -14, 0, 1}), bhat), sigma, t4m1));
      break;
    }
    case 4: {
      out.push_back(restricted("V_0", kernel_of(t_, bhat), sigma, t8m1, mults(2, 3, 4)));
      out.push_back(restricted("V_+2", kernel_of(lin(2), bhat), sigma, t8m1, mults(2, 2, 2)));
      out.push_back(restricted("V_-2", kernel_of(lin(-2), bhat), sigma, t8m1, mults(2, 2, 2)));
      out.push_back(restricted("V_+4", kernel_of(lin(4), bhat), sigma, P({1, 0, 1})));
      out.push_back(restricted("V_-4", kernel_of(lin(-4), bhat), sigma, t4m1));
      out.push_back(restricted("V_+-2sqrt2", kernel_of(P({-8, 0, 1}), bhat), sigma, P({-1, 0, 1})));
      break;
    }
    default:
      throw DomainError("cyclic form: k must be 2, 3 or 4");
  }
  return out;
}

namespace {

// r + sqrt2 * s
struct S2 {
  RationalVector r, s;
};

S2 s2(int k, const std::string& rat, const std::string& irr = "") {
  KForm a = form_from_string(8, k, rat);
  KForm b = irr.empty() ? KForm(8, k) : form_from_string(8, k, irr);
  return {a.to_vector(), b.to_vector()};
}

S2 s2(const KForm& a, const KForm& b) { return {a.to_vector(), b.to_vector()}; }

S2 apply(const RationalMatrix& m, const S2& v) { return {m * v.r, m * v.s}; }

// (p + q sqrt2) v
S2 times(const Rational& p, const Rational& q, const S2& v) {
  return {add(scaled(v.r, p), scaled(v.s, 2 * q)), add(scaled(v.r, q), scaled(v.s, p))};
}

S2 plus(const S2& a, const S2& b) { return {add(a.r, b.r), add(a.s, b.s)}; }
bool same(const S2& a, const S2& b) { return a.r == b.r && a.s == b.s; }

struct Fixture {
  std::string name;
  S2 v;
  Rational p, q;  // eigenvalue p + q sqrt2
};

void eigen_checks(const std::vector<Fixture>& fx, const RationalMatrix& b, std::vector<IdentityCheck>& out) {
  for (const auto& f : fx) {
    bool ok = !is_zero(f.v.r) || !is_zero(f.v.s);
    ok = ok && same(apply(b, f.v), times(f.p, f.q, f.v));
    std::string ev = to_string(f.p) + (f.q != 0 ? " + " + to_string(f.q) + " sqrt2" : "");
    out.push_back({f.name + " is an eigenvector for " + ev, ok, ""});
  }
}

// sigma(from) == (p + q sqrt2) * to [+ extra]
void orbit_check(const std::string& name, const RationalMatrix& sigma, const S2& from, const S2& to, Rational p,
                 Rational q, std::vector<IdentityCheck>& out, const S2* extra = nullptr) {
  S2 rhs = times(p, q, to);
  if (extra) rhs = plus(rhs, *extra);
  out.push_back({name, same(apply(sigma, from), rhs), ""});
}

std::string sg(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

std::vector<IdentityCheck> verify_listed_vectors(int k, const LinearOperator& bhat) {
  std::vector<IdentityCheck> out;
  const RationalMatrix sig = sigma_operator(1, k).matrix;
  const RationalMatrix& b = bhat.matrix;
  if (k == 2) {
    for (int s : {1, -1}) {
      const Rational S = s;
      // +-1 eigenspace, four-cycle with a sign
      std::vector<S2> v = {plus(s2(2, "e56 - e12"), times(S, 0, s2(2, "e38 + e47"))),
                           plus(s2(2, "e67 - e23"), times(S, 0, s2(2, "e58 - e14"))),
                           plus(s2(2, "e78 - e34"), times(-S, 0, s2(2, "e16 + e25"))),
                           plus(s2(2, "-e18 - e45"), times(-S, 0, s2(2, "e27 + e36")))};
      std::vector<Fixture> fx;
      for (int i = 0; i < 4; ++i) fx.push_back({"v" + std::to_string(i + 1) + sg(s) + " (beta=" + sg(s) + "1)", v[i], S, 0});
      eigen_checks(fx, b, out);
      for (int i = 0; i < 3; ++i)
        orbit_check("sigma v" + std::to_string(i + 1) + sg(s) + " = v" + std::to_string(i + 2) + sg(s), sig, v[i],
                    v[i + 1], 1, 0, out);
      orbit_check("sigma v4" + sg(s) + " = -v1" + sg(s), sig, v[3], v[0], -1, 0, out);

      // +-2 eigenvector
      S2 w = plus(s2(2, "e13 - e17 + e35 + e57"), times(-S, 0, s2(2, "e24 - e28 + e46 + e68")));
      eigen_checks({{"v" + sg(s) + " (beta=" + sg(s) + "2)", w, 2 * S, 0}}, b, out);
      orbit_check("sigma v" + sg(s) + " = " + (s > 0 ? "-" : "+") + "v" + sg(s), sig, w, w, -S, 0, out);

      // +-sqrt2 eigenspace
      S2 v1 = plus(s2(2, "-e13 + e17 + e35 + e57"), times(0, -S, s2(2, "e28 + e46")));
      S2 v2 = plus(s2(2, "-e24 - e28 - e46 + e68"), times(0, S, s2(2, "e17 + e35")));
      eigen_checks({{"v1" + sg(s) + " (beta=" + sg(s) + "sqrt2)", v1, 0, S}, {"v2" + sg(s) + " (beta=" + sg(s) + "sqrt2)", v2, 0, S}},
                   b, out);
      orbit_check("sigma v1" + sg(s) + " = " + (s > 0 ? "-" : "+") + "sqrt2 v1" + sg(s) + " + v2" + sg(s), sig, v1, v1,
                  0, -S, out, &v2);
      orbit_check("sigma v2" + sg(s) + " = -v1" + sg(s), sig, v2, v1, -1, 0, out);
    }
    for (int e : {1, -1})
      for (int h : {1, -1}) {
        const Rational E = e, H = h;
        KForm Pv = form_from_string(8, 2, "e14 + e58") + E * form_from_string(8, 2, "e36 - e27");
        KForm Qv = form_from_string(8, 2, "e23 + e67") + E * form_from_string(8, 2, "e45 - e18");
        KForm Pw = form_from_string(8, 2, "e47 - e38") + E * form_from_string(8, 2, "e25 - e16");
        KForm Qw = form_from_string(8, 2, "e12 + e56") + E * form_from_string(8, 2, "e34 + e78");
        S2 v = s2(Pv + E * Qv, H * Qv);
        S2 w = s2(Pw + E * Qw, H * Qw);
        std::string tag = "(eps=" + sg(e) + ", eta=" + sg(h) + ")";
        eigen_checks({{"v" + tag, v, E, H}, {"w" + tag, w, E, H}}, b, out);
        orbit_check("sigma v = eps w " + tag, sig, v, w, E, 0, out);
        orbit_check("sigma w = v " + tag, sig, w, v, 1, 0, out);
      }
    S2 w1 = s2(2, "e24 + e28 - e46 + e68"), w2 = s2(2, "e13 + e17 - e35 + e57");
    std::vector<S2> e = {s2(2, "e15"), s2(2, "e26"), s2(2, "e37"), s2(2, "e48")};
    eigen_checks({{"w1 (beta=0)", w1, 0, 0}, {"w2 (beta=0)", w2, 0, 0}, {"e15 (beta=0)", e[0], 0, 0},
                  {"e26 (beta=0)", e[1], 0, 0}, {"e37 (beta=0)", e[2], 0, 0}, {"e48 (beta=0)", e[3], 0, 0}},
                 b, out);
    orbit_check("sigma e15 = e26", sig, e[0], e[1], 1, 0, out);
    orbit_check("sigma e26 = e37", sig, e[1], e[2], 1, 0, out);
    orbit_check("sigma e37 = e48", sig, e[2], e[3], 1, 0, out);
    orbit_check("sigma e48 = -e15", sig, e[3], e[0], -1, 0, out);
    orbit_check("sigma w1 = -w2", sig, w1, w2, -1, 0, out);
    orbit_check("sigma (-w2) = -w1", sig, times(-1, 0, w2), w1, -1, 0, out);
  } else if (k == 3) {
    for (int s : {1, -1}) {
      const Rational S = s;
      auto pm = [&](const char* a, const char* c) { return plus(s2(3, a), times(S, 0, s2(3, c))); };
      std::vector<S2> w = {pm("e237 - e125 - e156 + e367", "e138 - e134 + e457 - e578"),
                           pm("e348 - e236 - e267 + e478", "e124 - e168 - e245 + e568"),
                           pm("e145 + e158 - e347 - e378", "e167 - e127 + e235 - e356"),
                           pm("e126 - e148 + e256 - e458", "e278 - e238 + e346 - e467")};
      std::vector<S2> u = {pm("e257 - e123 - e136 + e567", "e158 - e145 + e347 - e378"),
                           pm("e368 - e234 - e247 + e678", "e126 - e148 - e256 + e458"),
                           pm("e147 + e178 - e345 - e358", "e156 - e125 + e237 - e367"),
                           pm("e128 - e146 + e258 - e456", "e267 - e236 + e348 - e478")};
      std::vector<Fixture> fx;
      for (int i = 0; i < 4; ++i) {
        fx.push_back({"w" + std::to_string(i + 1) + sg(s) + " (beta=" + sg(s) + "2)", w[i], 2 * S, 0});
        fx.push_back({"u" + std::to_string(i + 1) + sg(s) + " (beta=" + sg(s) + "2)", u[i], 2 * S, 0});
      }
      eigen_checks(fx, b, out);
      for (int i = 0; i < 4; ++i) {
        std::string a = std::to_string(i + 1), c = std::to_string((i + 1) % 4 + 1);
        orbit_check("sigma w" + a + sg(s) + " = w" + c + sg(s), sig, w[i], w[(i + 1) % 4], 1, 0, out);
        orbit_check("sigma u" + a + sg(s) + " = " + (i == 3 ? "-" : "") + "u" + c + sg(s), sig, u[i],
                    u[(i + 1) % 4], i == 3 ? -1 : 1, 0, out);
      }
      std::vector<S2> v = {plus(s2(3, "e168 - e124 - e245 + e568"), times(0, S, s2(3, "e135 - e157"))),
                           plus(s2(3, "e127 + e167 - e235 - e356"), times(0, S, s2(3, "e246 - e268"))),
                           plus(s2(3, "e238 + e278 - e346 - e467"), times(0, S, s2(3, "e357 - e137"))),
                           plus(s2(3, "e134 + e138 - e457 - e578"), times(0, S, s2(3, "e468 - e248")))};
      fx.clear();
      for (int i = 0; i < 4; ++i) fx.push_back({"v" + std::to_string(i + 1) + sg(s) + " (beta=" + sg(s) + "sqrt2)", v[i], 0, S});
      eigen_checks(fx, b, out);
      for (int i = 0; i < 4; ++i)
        orbit_check("sigma v" + std::to_string(i + 1) + sg(s) + " = " + (i == 3 ? "-" : "") + "v" +
                        std::to_string((i + 1) % 4 + 1) + sg(s),
                    sig, v[i], v[(i + 1) % 4], i == 3 ? -1 : 1, 0, out);
    }
    std::vector<std::pair<std::string, std::vector<S2>>> cycles = {
        {"x", {s2(3, "e236 - e267 + e348 - e478"), s2(3, "e145 - e158 + e347 - e378"),
               s2(3, "e256 - e126 - e148 + e458"), s2(3, "e156 - e125 - e237 + e367")}},
        {"y", {s2(3, "e123 - e136 + e257 - e567"), s2(3, "e234 - e247 + e368 - e678"),
               s2(3, "e147 - e178 + e345 - e358"), s2(3, "e258 - e128 - e146 + e456")}},
        {"u", {s2(3, "e278 - e238 - e346 + e467"), s2(3, "e138 - e134 - e457 + e578"),
               s2(3, "e124 + e168 - e245 - e568"), s2(3, "e127 - e167 + e235 - e356")}}};
    for (const auto& [nm, vs] : cycles) {
      std::vector<Fixture> fx;
      for (int i = 0; i < 4; ++i) fx.push_back({nm + std::to_string(i + 1) + " (beta=0)", vs[i], 0, 0});
      eigen_checks(fx, b, out);
      for (int i = 0; i < 4; ++i)
        orbit_check("sigma " + nm + std::to_string(i + 1) + " = " + (i == 3 ? "-" : "") + nm +
                        std::to_string((i + 1) % 4 + 1),
                    sig, vs[i], vs[(i + 1) % 4], i == 3 ? -1 : 1, 0, out);
    }
    S2 v1 = s2(3, "e127 - e123 - e134 - e136 - e138 + e147 + e167 + e178 + e235 - e257 + e345 + e356 + e358 - e457 - e567 - e578");
    S2 v2 = s2(3, "e128 - e124 + e146 - e168 - e234 + e238 - e245 - e247 + e258 + e278 + e346 - e368 + e456 + e467 - e568 - e678");
    S2 w1 = s2(3, "e127 - e123 + e134 - e136 + e138 - e147 + e167 - e178 + e235 - e257 - e345 + e356 - e358 + e457 - e567 + e578");
    S2 w2 = s2(3, "e124 - e128 - e146 + e168 - e234 + e238 + e245 - e247 - e258 + e278 + e346 - e368 - e456 + e467 + e568 - e678");
    eigen_checks({{"v1 (beta=0)", v1, 0, 0}, {"v2 (beta=0)", v2, 0, 0}, {"w1 (beta=0)", w1, 0, 0}, {"w2 (beta=0)", w2, 0, 0}},
                 b, out);
    orbit_check("sigma v1 = v2", sig, v1, v2, 1, 0, out);
    orbit_check("sigma v2 = -v1", sig, v2, v1, -1, 0, out);
    orbit_check("sigma w1 = w2", sig, w1, w2, 1, 0, out);
    orbit_check("sigma w2 = w1", sig, w2, w1, 1, 0, out);
  } else if (k == 4) {
    for (int s : {1, -1}) {
      const Rational S = s;
      auto pm = [&](const char* a, const char* c, int sign) {
        return plus(s2(4, a), times(Rational(sign) * S, 0, s2(4, c)));
      };
      S2 v1 = pm("e1257 + e1356 + e2478 + e3468", "e1347 - e1246 + e2568 - e3578", 1);
      S2 v2 = pm("e2368 + e2467 - e1358 - e1457", "e1367 - e1468 + e2357 - e2458", -1);
      S2 w1 = pm("e1357 - e1458 - e2367 + e2468", "e1368 + e1467 + e2358 + e2457", -1);
      S2 w2 = pm("e1256 - e1357 + e2468 - e3478", "e1247 + e1346 - e2578 - e3568", 1);
      std::string bt = " (beta=" + sg(s) + "4)";
      eigen_checks({{"v1" + sg(s) + bt, v1, 4 * S, 0}, {"v2" + sg(s) + bt, v2, 4 * S, 0}, {"w1" + sg(s) + bt, w1, 4 * S, 0},
                    {"w2" + sg(s) + bt, w2, 4 * S, 0}},
                   b, out);
      orbit_check("sigma v1" + sg(s) + " = v2" + sg(s), sig, v1, v2, 1, 0, out);
      orbit_check("sigma v2" + sg(s) + " = " + (s > 0 ? "-" : "+") + "v1" + sg(s), sig, v2, v1, -S, 0, out);
      // printed arrow w1 -> -w2 carries a sign slip; the computed orbit is w1 -> w2 -> -w1
      orbit_check("sigma w1" + sg(s) + " = w2" + sg(s), sig, w1, w2, 1, 0, out);
      orbit_check("sigma w2" + sg(s) + " = -w1" + sg(s), sig, w2, w1, -1, 0, out);

      // sqrt2 part of u2 taken as e1256 + e3478 (the sign that makes u1 -> u2 -> u1 hold)
      S2 u1 = plus(s2(4, "e2345 - e1238 - e1678 + e4567"), times(0, S, s2(4, "e2367 - e1458")));
      S2 u2 = plus(s2(4, "e1234 + e1278 + e3456 + e5678"), times(0, S, s2(4, "e1256 + e3478")));
      std::string ut = " (beta=" + sg(s) + "2sqrt2)";
      eigen_checks({{"u1" + sg(s) + ut, u1, 0, 2 * S}, {"u2" + sg(s) + ut, u2, 0, 2 * S}}, b, out);
      orbit_check("sigma u1" + sg(s) + " = u2" + sg(s), sig, u1, u2, 1, 0, out);
      orbit_check("sigma u2" + sg(s) + " = u1" + sg(s), sig, u2, u1, 1, 0, out);
    }
    // Omega = half the sum of the four u-vectors; the partner is sqrt2 times the rational form w0
    KForm Om = form_from_string(8, 4, "e2345 - e1238 - e1678 + e4567 + e1234 + e1278 + e3456 + e5678");
    KForm w0 = form_from_string(8, 4, "e2367 - e1458 + e1256 + e3478");
    out.push_back({"half-sum of the u-vectors is the cyclic form", Om == z8_four_form(), ""});
    out.push_back({"half-difference of the u-vectors is sqrt2 times the catalog partner", w0 == z8_omega_partner(), ""});
    // b in the stated normalization is bhat / prefactor
    const Rational inv = Rational(1, z8_prefactor(4));
    RationalVector om = Om.to_vector(), wv = w0.to_vector();
    out.push_back({"b(Omega) = 2/3 w0", scaled(b * om, inv) == scaled(wv, Rational(2, 3)), ""});
    out.push_back({"b(w0) = 1/3 Omega", scaled(b * wv, inv) == scaled(om, Rational(1, 3)), ""});
    auto W = kernel_basis(poly_eval_matrix(P({-8, 0, 1}), b));
    Restriction r = restrict_to(sig, W);
    std::size_t fixed = 0;
    if (r.invariant) fixed = kernel_basis(r.matrix - RationalMatrix::identity(r.matrix.rows())).size();
    out.push_back({"+1 eigenspace of sigma on V_{+-2sqrt2} is two-dimensional", fixed == 2,
                   "dim " + std::to_string(fixed)});
    bool contains = true;
    for (const auto& x : {om, wv})
      contains = contains && is_zero(sub(sig * x, x)) && is_zero(poly_eval_matrix(P({-8, 0, 1}), b) * x);
    out.push_back({"Omega and w0 lie in that eigenspace", contains, ""});
  } else {
    throw DomainError("cyclic fixtures exist for k = 2, 3, 4");
  }
  return out;
}

}  // namespace formdual
