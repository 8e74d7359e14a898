#include "formdual/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "formdual/catalog.hpp"
#include "formdual/discrete_symmetry.hpp"
#include "formdual/duality.hpp"
#include "formdual/errors.hpp"
#include "formdual/lifts.hpp"
#include "formdual/minimal_polynomial.hpp"
#include "formdual/parallel.hpp"
#include "formdual/spectral.hpp"

namespace formdual {

namespace {

Rational Q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

RationalPolynomial P(std::vector<Rational> c) { return RationalPolynomial(std::move(c)); }
RationalPolynomial lin(const Rational& r) { return RationalPolynomial::linear_root(r); }
RationalPolynomial t_plus_sq(const Rational& mu) { return P({mu * mu, 0, 1}); }  // t^2 + mu^2
const RationalPolynomial T = RationalPolynomial::monomial(1);

using Spec = std::map<Rational, std::size_t>;

std::optional<Spec> rational_spectrum(const SpectrumReport& r) {
  Spec s;
  for (const auto& e : r.eigen) {
    if (e.value.kind != EigenvalueDescriptor::Kind::rational) return std::nullopt;
    s[e.value.q] += e.dim;
  }
  return s;
}

std::string fmt(const Spec& s) {
  std::string out = "{";
  for (const auto& [v, d] : s) out += (out.size() > 1 ? ", " : "") + to_string(v) + ":" + std::to_string(d);
  return out + "}";
}

std::string fmt(const std::optional<Spec>& s) { return s ? fmt(*s) : "not rational"; }

std::string fmt_factors(const SpectrumReport& r) {
  std::string out;
  for (const auto& f : r.factors) out += (out.empty() ? "" : "; ") + f.factor.to_string() + ": " + std::to_string(f.dim);
  return out;
}

std::string fmt(const std::optional<Rational>& q) { return q ? to_string(*q) : "none"; }

RationalMatrix I(std::size_t n) { return RationalMatrix::identity(n); }

std::size_t kernel_dim(const RationalMatrix& m) { return m.cols() - rank(m); }

// lambda with M v = lambda v for every v in K
std::optional<Rational> scalar_on(const RationalMatrix& M, const std::vector<RationalVector>& K) {
  std::optional<Rational> lambda;
  for (const auto& v : K) {
    RationalVector w = M * v;
    std::size_t i = 0;
    while (i < v.size() && v[i] == 0) ++i;
    if (i == v.size()) continue;
    Rational l = w[i] / v[i];
    if (w != scaled(v, l)) return std::nullopt;
    if (lambda && *lambda != l) return std::nullopt;
    lambda = l;
  }
  return lambda;
}

// power sums of the roots of a monic polynomial (Newton)
std::vector<Rational> power_sums(const RationalPolynomial& f, int upto) {
  const int d = f.degree();
  std::vector<Rational> p(upto + 1, 0);
  p[0] = d;
  for (int j = 1; j <= upto; ++j) {
    Rational s = j <= d ? Rational(j) * f.coeff(d - j) : Rational(0);
    for (int i = 1; i < j && i <= d; ++i) s += f.coeff(d - i) * p[j - i];
    p[j] = -s;
  }
  return p;
}

// whether every root of the squarefree factor f carries the same multiplicity on ker f(M)
bool equal_split(const RationalMatrix& M, const RationalPolynomial& f) {
  auto K = kernel_basis(poly_eval_matrix(f, M));
  const int d = f.degree();
  if (K.size() % d) return false;
  if (K.empty()) return true;
  Restriction r = restrict_to(M, K);
  if (!r.invariant) return false;
  auto p = power_sums(f.monic(), d - 1);
  const Rational share = Rational(K.size()) / d;
  RationalMatrix pw = I(K.size());
  for (int j = 1; j < d; ++j) {
    pw = pw * r.matrix;
    if (pw.trace() != share * p[j]) return false;
  }
  return true;
}

// each eigenspace of b on Lambda^k is carried by * into the matching eigenspace on Lambda^(D-k), scaled by
// C(k,m)/C(D-k,m)
std::pair<bool, std::string> hodge_pairing(const KForm& omega, int k) {
  const int D = omega.dim(), m = omega.degree() / 2;
  auto bk = build_duality_operator(omega, k).op.matrix;
  auto bo = build_duality_operator(omega, D - k).op.matrix;
  const Rational r = Rational(binomial(k, m)) / Rational(binomial(D - k, m));
  const RationalMatrix H = hodge_operator(D, k).matrix;
  std::size_t checked = 0;
  for (const auto& f : split_factors(minimal_polynomial(bk))) {
    auto K = kernel_basis(poly_eval_matrix(f, bk));
    RationalPolynomial g = f.rescale(1 / r).monic();
    RationalMatrix G = poly_eval_matrix(g, bo);
    for (const auto& v : K)
      if (!is_zero(G * (H * v))) return {false, "factor " + f.to_string() + ": image of a kernel vector leaves ker " + g.to_string()};
    if (kernel_dim(G) != K.size())
      return {false, "factor " + f.to_string() + ": dimensions differ across the star"};
    checked += K.size();
  }
  return {checked == bk.rows(), std::to_string(checked) + " eigenvectors carried, ratio " + to_string(r)};
}

RationalVector vec(const KForm& F) { return F.to_vector(); }

std::string k_tag(int k) { return "k" + std::to_string(k); }

// ---------------------------------------------------------------- spin7

VerificationOutcome suite_spin7() {
  VerificationOutcome o{"spin7", {}};
  const KForm theta = spin7_four_form();

  // calibration and the order-two relation
  auto b3 = build_duality_operator(theta, 3);
  const RationalMatrix& M3 = b3.op.matrix;
  auto r3 = spectrum(b3.op, "b_theta8|L3");
  auto s3 = rational_spectrum(r3);
  o.add("01.a", 1, "calibrated 3-form spectrum is {-4:8, 2/3:48}",
        kKappa == 1 && s3 == Spec{{-4, 8}, {Q(2, 3), 48}}, "kappa " + to_string(kKappa) + ", spectrum " + fmt(s3));
  o.add("01.b", 1, "b^2 + 10/3 b - 8/3 id = 0 on 3-forms",
        (M3 * M3 + Q(10, 3) * M3 - Q(8, 3) * I(56)).is_zero(), "minimal polynomial " + r3.min_poly.to_string());
  {
    auto [p1, p2] = order2_projections(b3, -4, Q(2, 3));
    bool ok = rank(p1.matrix) == 8 && rank(p2.matrix) == 48 && p1.matrix + p2.matrix == I(56) &&
              p1.matrix * p1.matrix == p1.matrix && p2.matrix * p2.matrix == p2.matrix &&
              M3 * p1.matrix == Rational(-4) * p1.matrix && M3 * p2.matrix == Q(2, 3) * p2.matrix;
    o.add("01.c", 1, "order-two projections onto the -4 and 2/3 eigenspaces", ok,
          "ranks " + std::to_string(rank(p1.matrix)) + ", " + std::to_string(rank(p2.matrix)));
  }
  o.add("01.d", 1, "order-two operator on 3-forms is perfect (2 irreducible pieces)", perfectness(r3, 2),
        "order " + std::to_string(r3.order));

  // four-forms
  auto b4 = build_duality_operator(theta, 4);
  const RationalMatrix& M4 = b4.op.matrix;
  auto r4 = spectrum(b4.op, "b_theta8|L4", stated_factors("theta8", 4));
  o.add("03.a", 3, "4-form minimal polynomial t(t+2)(t+4)(t-2/3)", r4.expected_ok.value_or(false),
        "computed " + r4.min_poly.to_string() + (r4.detail.empty() ? "" : "; " + r4.detail));
  auto s4 = rational_spectrum(r4);
  o.add("03.b", 3, "4-form eigenspace dimensions {0:35, -4:1, -2:7, 2/3:27}",
        s4 == Spec{{0, 35}, {-4, 1}, {-2, 7}, {Q(2, 3), 27}}, fmt(s4));
  o.add("03.c", 3, "b(theta) = -4 theta", apply(b4, theta) == Rational(-4) * theta);
  {
    bool ok = true;
    for (const auto& Iidx : basis(8, 4)) {
      KForm e(8, 4);
      e.add(Iidx, 1);
      KForm anti = e - hodge_star(e);
      ok = ok && apply(b4, anti).is_zero();
    }
    o.add("03.d", 3, "anti-self-dual 4-forms lie in ker b", ok);
  }
  {
    std::size_t d = kernel_dim(M4 + Rational(3) * I(70));
    o.add("03.e", 3, "-3 is not an eigenvalue on 4-forms", d == 0, "dim ker(b+3) = " + std::to_string(d));
  }
  o.add("03.f", 3, "4-form operator is perfect (4 irreducible pieces)", perfectness(r4, 4),
        "order " + std::to_string(r4.order));
  const RationalPolynomial quintic = T * lin(-4) * lin(-3) * lin(-2) * lin(Q(2, 3));
  {
    auto roots = rational_root_check(quintic);
    Spec got;
    for (const auto& r : roots) got[r.value] = r.multiplicity;
    o.add("03.g", 3, "candidate eigenvalues 0, -2, -3, -4, 2/3 from the quintic",
          got == Spec{{0, 1}, {-2, 1}, {-3, 1}, {-4, 1}, {Q(2, 3), 1}}, fmt(got));
  }

  // contraction identities
  {
    auto ids = theta_trace_identities(theta);
    for (std::size_t i = 0; i < ids.size(); ++i)
      o.add("04." + std::string(1, char('a' + i)), 4, ids[i].name, ids[i].holds, ids[i].detail);
    o.add("04.e", 4, "<theta, theta> * 4! = 336", inner_product(theta, theta) * 24 == 336,
          "<theta, theta> = " + to_string(inner_product(theta, theta)));
    auto fit = theta_squared_decomposition(theta);
    o.add("04.f", 4, "three-term ansatz for theta (x) theta fits with zero residual", fit.consistent && fit.residual_zero,
          "fitted (" + to_string(fit.a) + ", " + to_string(fit.b) + ", " + to_string(fit.c) + ")");
  }

  // operator chain on 4-forms
  {
    const ComponentTable tab(theta);
    auto t4 = [&](int a, int b, int c, int d) -> const Rational& {
      const int x[4] = {a, b, c, d};
      return tab(x);
    };
    const Rational zero = 0;
    auto T1 = tensor_expression_operator(8, 4, 4, [&](const int* out, const int* in) {
      const Rational& f = t4(in[0], in[1], out[0], out[1]);
      return f == 0 ? zero : Rational(f * t4(in[2], in[3], out[2], out[3]));
    });
    auto T2 = tensor_expression_operator(8, 4, 4, [&](const int* out, const int* in) {
      const Rational& f = t4(out[0], out[1], out[2], in[0]);
      return f == 0 ? zero : Rational(f * t4(in[2], in[3], in[1], out[3]));
    });
    auto T3 = tensor_expression_operator(8, 4, 4, [&](const int* out, const int* in) {
      const Rational& f = t4(out[0], out[1], out[2], out[3]);
      return f == 0 ? zero : Rational(f * t4(in[0], in[1], in[2], in[3]));
    });
    const RationalMatrix Id = I(70), B2 = M4 * M4, B3 = B2 * M4, B4 = B3 * M4, B5 = B4 * M4;
    o.add("05.a", 5, "b^2 = T1/6 + 2/3 id - 8/3 b on all 70 basis 4-forms",
          B2 == Q(1, 6) * T1.matrix + Q(2, 3) * Id - Q(8, 3) * M4);
    o.add("05.b", 5, "b^3 = 4/3 id + 2/3 b - 10/3 b^2 + 2/9 T2 on all 70 basis 4-forms",
          B3 == Q(4, 3) * Id + Q(2, 3) * M4 - Q(10, 3) * B2 + Q(2, 9) * T2.matrix);
    o.add("05.c", 5, "b^4 = 4 b - 8/3 b^2 - 13/3 b^3 + 1/9 T3 on all 70 basis 4-forms",
          B4 == Rational(4) * M4 - Q(8, 3) * B2 - Q(13, 3) * B3 + Q(1, 9) * T3.matrix);
    o.add("05.d", 5, "b^5 = -25/3 b^4 - 20 b^3 - 20/3 b^2 + 16 b",
          B5 == Q(-25, 3) * B4 - Rational(20) * B3 - Q(20, 3) * B2 + Rational(16) * M4);
    o.add("05.e", 5, "t(t+4)(t+3)(t+2)(t-2/3) annihilates b on 4-forms", poly_eval_matrix(quintic, M4).is_zero());
  }
  return o;
}

// ---------------------------------------------------------------- g2

VerificationOutcome suite_g2() {
  VerificationOutcome o{"g2", {}};
  const KForm theta = spin7_four_form(), th3 = g2_three_form(), th4 = g2_four_form();
  o.add("02.a", 2, "*7 theta = thetabar", hodge_star(th3) == th4);
  {
    KForm e8(8, 1);
    e8.add_component({8}, 1);
    o.add("02.b", 2, "theta8 = lift(thetabar) + theta ^ e8, and *8 theta8 = theta8",
          theta == trivial_lift(th4, 8) + wedge(trivial_lift(th3, 8), e8) && hodge_star(theta) == theta);
  }
  auto b8 = build_duality_operator(theta, 2);
  auto s8 = rational_spectrum(spectrum(b8.op, "b_theta8|L2"));
  o.add("02.c", 2, "spin(7) 2-form spectrum {2:21, -6:7}", s8 == Spec{{-6, 7}, {2, 21}}, fmt(s8));
  auto b7 = build_duality_operator(th4, 2);
  auto s7 = rational_spectrum(spectrum(b7.op, "b_thetabar7|L2"));
  o.add("02.d", 2, "G2 2-form spectrum {2:14, -4:7}", s7 == Spec{{-4, 7}, {2, 14}}, fmt(s7));
  {
    auto [p1, p2] = order2_projections(b7, 2, -4);
    auto [q1, q2] = order2_projections(b8, 2, -6);
    bool ok = rank(p1.matrix) == 14 && rank(p2.matrix) == 7 && rank(q1.matrix) == 21 && rank(q2.matrix) == 7 &&
              p1.matrix + p2.matrix == I(21) && q1.matrix + q2.matrix == I(28);
    o.add("02.e", 2, "order-two projections on 2-forms have ranks 14, 7 (G2) and 21, 7 (spin(7))", ok);
  }
  bool threw = false;
  try {
    order2_projections(b7, 2, 2);
  } catch (const ContractViolation&) {
    threw = true;
  }
  o.add("02.f", 2, "coincident roots are rejected by the projection builder", threw);

  auto r3 = spectrum(build_duality_operator(th4, 3).op, "b_thetabar7|L3", stated_factors("thetabar7", 3));
  o.add("06.a", 6, "G2 3-form minimal polynomial t^3 + 16/3 t^2 + 4 t - 16/3",
        r3.min_poly == P({Q(-16, 3), 4, Q(16, 3), 1}), r3.min_poly.to_string());
  auto s3 = rational_spectrum(r3);
  o.add("06.b", 6, "G2 3-form dimensions {-4:1, -2:7, 2/3:27}", s3 == Spec{{-4, 1}, {-2, 7}, {Q(2, 3), 27}}, fmt(s3));
  return o;
}

// ---------------------------------------------------------------- lifts

struct LiftExpectation {
  int k;
  std::vector<RationalPolynomial> factors;
  std::multiset<std::size_t> dims;
  Rational middle;
  ContractionVariant low, high;  // block (2,0) and block (0,2)
  Rational low_scalar, high_scalar;
};

VerificationOutcome suite_lifts() {
  VerificationOutcome o{"lifts", {}};
  const KForm theta = spin7_four_form();
  std::map<int, LinearOperator> b8;
  for (int k = 1; k <= 5; ++k) b8[k] = build_duality_operator(theta, k).op;
  std::map<ContractionVariant, LinearOperator> cm;
  for (auto v : {ContractionVariant::d, ContractionVariant::d_tilde, ContractionVariant::c, ContractionVariant::c_tilde,
                 ContractionVariant::e, ContractionVariant::e_tilde})
    cm[v] = contraction_map(theta, v);
  const auto& d = cm[ContractionVariant::d].matrix;
  const auto& dt = cm[ContractionVariant::d_tilde].matrix;
  const auto& c = cm[ContractionVariant::c].matrix;
  const auto& ct = cm[ContractionVariant::c_tilde].matrix;
  const auto& e = cm[ContractionVariant::e].matrix;
  const auto& et = cm[ContractionVariant::e_tilde].matrix;

  // contraction maps
  o.add("07.a", 7, "d d~ = -6/5 id + 3/2 b on 3-forms", d * dt == Q(-6, 5) * I(56) + Q(3, 2) * b8[3].matrix);
  {
    const RationalMatrix H3 = hodge_operator(8, 3).matrix;
    RationalMatrix sds = H3 * (d * H3);
    auto p = proportionality(sds, dt);
    o.add("07.b", 7, "*d* = -20 d~", sds == Rational(-20) * dt, "realized factor " + (p.proportional ? to_string(p.lambda) : std::string("none")));
  }
  auto K2m6 = kernel_basis(b8[2].matrix + Rational(6) * I(28));
  auto K4m2 = kernel_basis(b8[4].matrix + Rational(2) * I(70));
  auto K3m4 = kernel_basis(b8[3].matrix + Rational(4) * I(56));
  auto K3p = kernel_basis(b8[3].matrix - Q(2, 3) * I(56));
  {
    auto l = scalar_on(c * ct, K2m6);
    o.add("07.c", 7, "c c~ = -24 id on the -6 eigenspace of 2-forms", l == Rational(-24), "realized " + fmt(l));
  }
  {
    auto l = scalar_on(ct * c, K4m2);
    o.add("07.d", 7, "c~ c = -24 id on the -2 eigenspace of 4-forms", l == Rational(-24), "realized " + fmt(l));
  }
  {
    auto Kc = kernel_basis(ct);
    auto K22 = kernel_basis(b8[2].matrix - Rational(2) * I(28));
    bool ok = Kc.size() == K22.size();
    for (const auto& v : Kc) ok = ok && in_span(K22, v);
    o.add("07.e", 7, "ker c~ is the 2 eigenspace of 2-forms", ok,
          "dim ker c~ = " + std::to_string(Kc.size()) + ", dim eigenspace = " + std::to_string(K22.size()));
  }
  {
    bool ok = !K3p.empty();
    for (const auto& v : K3p) ok = ok && is_zero(e * v);
    o.add("07.f", 7, "e vanishes on the 2/3 eigenspace of 3-forms", ok);
  }
  {
    auto l = scalar_on(et * e, K3m4);
    o.add("07.g", 7, "e~ e = -24 id on the -4 eigenspace of 3-forms", l == Rational(-24), "realized " + fmt(l));
  }
  {
    RationalMatrix ee = e * et;
    auto l = scalar_on(ee, kernel_basis(RationalMatrix(1, 8)));
    o.add("07.h", 7, "e e~ = -24 id on 1-forms", ee == Rational(-24) * I(8), "realized " + fmt(l));
  }

  // lifted spectra and block structure
  const KForm hat = hodge_dual_lift(theta, 10);
  const KForm eps = plane_volume_form(10);
  o.add("08.a", 8, "dual lift of theta8 to R^10 equals theta8 ^ e9 ^ e10", hat == wedge(trivial_lift(theta, 10), eps));
  const std::vector<LiftExpectation> lifted = {
      {5, *stated_factors("theta8hat", 5), {70, 2, 30, 54, 96}, Q(9, 5), ContractionVariant::d,
       ContractionVariant::d_tilde, Q(3, 10), 6},
      {4, *stated_factors("theta8hat", 4), {84, 16, 96, 14}, Q(9, 4), ContractionVariant::c, ContractionVariant::c_tilde,
       Q(1, 2), 6},
      {3, *stated_factors("theta8hat", 3), {48, 14, 42, 16}, Rational(-3), ContractionVariant::e, ContractionVariant::e_tilde, 1, 6},
  };
  std::vector<VerificationOutcome> parts(lifted.size());
  std::map<int, RationalMatrix> bhat;
  for (const auto& x : lifted) bhat[x.k] = build_duality_operator(hat, x.k).op.matrix;
  parallel_for(lifted.size(), [&](std::size_t i) {
    const auto& x = lifted[i];
    auto& out = parts[i];
    const std::string tag = "08." + k_tag(x.k);
    LinearOperator op(10, x.k, x.k, bhat.at(x.k));
    auto rep = spectrum(op, "b_theta8hat|L" + std::to_string(x.k), x.factors);
    auto own = spectrum(op, "b_theta8hat|L" + std::to_string(x.k));
    std::string realized;
    for (const auto& f : own.factors) realized += (realized.empty() ? "" : ", ") + f.factor.to_string();
    out.add(tag + ".a", 8, "lifted minimal polynomial on " + std::to_string(x.k) + "-forms matches the stated factors",
            rep.expected_ok.value_or(false), "realized factors " + realized + (rep.detail.empty() ? "" : "; " + rep.detail));
    std::multiset<std::size_t> dims;
    for (const auto& f : own.factors) dims.insert(f.dim);
    out.add(tag + ".b", 8, "lifted real-dimension partition on " + std::to_string(x.k) + "-forms", dims == x.dims && own.dims_sum_ok,
            fmt_factors(own));
    SplitBasis split(8, x.k);
    auto grid = block_decompose(op, split);
    bool pattern = true;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        bool expect_nonzero = a + b == 2;
        if (grid.is_zero(a, b) == expect_nonzero) pattern = false;
      }
    out.add(tag + ".c", 8, "lifted operator on " + std::to_string(x.k) + "-forms is anti-diagonal in the three-block split", pattern);
    auto mid = proportionality(grid.block[1][1], kron(b8[x.k - 1].matrix, plane_star(1)));
    out.add(tag + ".d", 8, "middle block = " + to_string(x.middle) + " b (x) *2", mid.proportional && mid.lambda == x.middle,
            mid.proportional ? "lambda = " + to_string(mid.lambda) : "not proportional");
    auto lo = proportionality(grid.block[2][0], kron(cm[x.low].matrix, plane_star(0)));
    auto hi = proportionality(grid.block[0][2], kron(cm[x.high].matrix, plane_star(2)));
    out.add(tag + ".e", 8,
            std::string("corner blocks = ") + to_string(x.low_scalar) + " " + variant_name(x.low) + " (x) *2 and " +
                to_string(x.high_scalar) + " " + variant_name(x.high) + " (x) *2",
            lo.proportional && hi.proportional && lo.lambda == x.low_scalar && hi.lambda == x.high_scalar,
            "lambda = " + (lo.proportional ? to_string(lo.lambda) : std::string("none")) + ", " +
                (hi.proportional ? to_string(hi.lambda) : std::string("none")));
  });
  for (const auto& p : parts) o.append(p);
  {
    // kernel on 5-forms is ker(b|L4) (x) R^2 inside the middle block
    auto K4 = kernel_basis(b8[4].matrix);
    const RationalMatrix& B5 = bhat.at(5);
    bool ok = true;
    for (const auto& v : K4)
      for (int p : {9, 10}) {
        KForm ep(10, 1);
        ep.add_component({p}, 1);
        ok = ok && is_zero(B5 * vec(wedge(trivial_lift(KForm::from_vector(8, 4, v), 10), ep)));
      }
    std::size_t kd = kernel_dim(B5);
    o.add("08.f", 8, "kernel on 5-forms is ker(b|L4) (x) R^2", ok && kd == 2 * K4.size(),
          "dim ker = " + std::to_string(kd) + ", 2 dim ker(b|L4) = " + std::to_string(2 * K4.size()));
  }
  {
    // coupling plane for the -4 eigenspace of 3-forms
    const RationalMatrix& B5 = bhat.at(5);
    bool ok = !K3m4.empty();
    for (const auto& v : K3m4) {
      KForm F = KForm::from_vector(8, 3, v);
      RationalVector X = vec(trivial_lift(KForm::from_vector(8, 5, dt * v), 10));
      RationalVector Y = vec(wedge(trivial_lift(F, 10), eps));
      ok = ok && B5 * Y == scaled(X, 6) && B5 * X == scaled(Y, Q(-54, 25));
    }
    o.add("08.g", 8, "d~v and v ^ eps span a plane with b^2 = -(18/5)^2 for v in the -4 eigenspace", ok,
          "b(v ^ eps) = 6 d~v, b(d~v) = -54/25 v ^ eps; realized convention *2 e9 = e10, R+ pairs with +i");
  }

  // trivial lift
  {
    auto bt = build_duality_operator(trivial_lift(theta, 10), 4);
    SplitBasis split(8, 4);
    auto grid = block_decompose(bt.op, split);
    bool diag = true;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != b && !grid.is_zero(a, b)) diag = false;
    std::string lambdas;
    for (int j = 0; j < 3; ++j) {
      auto p = proportionality(grid.block[j][j], kron(b8[4 - j].matrix, I(binomial(2, j))));
      Rational want = Rational(binomial(4 - j, 2)) / Rational(binomial(4, 2));
      diag = diag && p.proportional && p.lambda == want;
      lambdas += (j ? ", " : "") + (p.proportional ? to_string(p.lambda) : std::string("none"));
    }
    o.add("09.a", 9, "trivial lift acts blockwise as C(4-j,2)/C(4,2) b (x) id", diag, "block scalars " + lambdas);
    auto rep = spectrum(bt.op, "b_theta8lift|L4");
    auto s = rational_spectrum(rep);
    o.add("09.b", 9, "trivial-lift spectrum on 4-forms of R^10", s == Spec{{-4, 1}, {-2, 23}, {-1, 7}, {0, 35}, {Q(1, 3), 117}, {Q(2, 3), 27}},
          fmt(s));
    // spin(7) + so(2): 4 pieces on Lambda^4 R^8, 2 on Lambda^3 R^8 (x) R^2, 2 on Lambda^2 R^8
    bool perfect = perfectness(rep, 8);
    o.add("09.c", 9, "trivial lift is not perfect", !perfect, "order " + std::to_string(rep.order) + " against 8 irreducible pieces");
  }
  return o;
}

// ---------------------------------------------------------------- z8

struct PartitionEntry {
  RationalPolynomial factor;
  std::size_t dim;
};

VerificationOutcome suite_z8() {
  VerificationOutcome o{"z8", {}};
  const KForm omega = z8_four_form();
  auto s = z8_scalar();
  o.add("10.a", 10, "one uniform scalar relates c_k b to the stated spectra for k = 2, 3, 4", s.has_value(),
        "scalar " + fmt(s) + ", c2 = " + std::to_string(z8_prefactor(2)));
  const Rational S = s.value_or(1);
  const std::map<int, std::vector<PartitionEntry>> partitions = {
      {2, {{T, 6}, {lin(1), 4}, {lin(-1), 4}, {lin(2), 1}, {lin(-2), 1}, {P({-2, 0, 1}), 4}, {P({-1, -2, 1}), 4}, {P({-1, 2, 1}), 4}}},
      {3, {{T, 16}, {lin(2), 8}, {lin(-2), 8}, {P({-2, 0, 1}), 8}, {P({16, 0, -14, 0, 1}), 16}}},
      {4, {{T, 26}, {lin(2), 16}, {lin(-2), 16}, {lin(4), 4}, {lin(-4), 4}, {P({-8, 0, 1}), 4}}}};
  const std::map<int, std::map<std::string, std::size_t>> sigma_mults = {
      {2, {{"1", 3}, {"-1", 3}, {"i", 3}, {"-i", 3}, {"primitive", 4}}},
      {3, {{"1", 7}, {"-1", 7}, {"i", 7}, {"-i", 7}, {"primitive", 7}}},
      {4, {{"1", 9}, {"-1", 9}, {"i", 10}, {"-i", 10}, {"primitive", 8}}}};
  std::vector<VerificationOutcome> parts(3);
  parallel_for(3, [&](std::size_t i) {
    const int k = static_cast<int>(i) + 2;
    auto& out = parts[i];
    const std::string tag = "10." + k_tag(k);
    auto bh = z8_normalized_operator(k, S);
    auto rep = spectrum(bh, "z8 normalized b|L" + std::to_string(k), z8_stated_factors(k));
    out.add(tag + ".a", 10, std::to_string(z8_prefactor(k)) + " b / s minimal polynomial on " + std::to_string(k) + "-forms matches",
            rep.expected_ok.value_or(false), rep.min_poly.to_string());
    bool ok = rep.dims_sum_ok;
    std::string detail;
    for (const auto& pe : partitions.at(k)) {
      std::size_t d = kernel_dim(poly_eval_matrix(pe.factor, bh.matrix));
      bool split = equal_split(bh.matrix, pe.factor);
      ok = ok && d == pe.dim && split;
      detail += (detail.empty() ? "" : "; ") + pe.factor.to_string() + ": " + std::to_string(d) + (split ? "" : " (uneven)");
    }
    out.add(tag + ".b", 10, "eigenspace partition of " + std::to_string(binomial(8, k)), ok, detail);
    auto raw = build_duality_operator(omega, k).op.matrix;
    bool commute = true;
    for (int a = 1; a < 8; ++a) {
      auto sg = sigma_operator(a, k).matrix;
      commute = commute && sg * raw == raw * sg;
    }
    out.add(tag + ".c", 10, "b commutes with every sigma_a on " + std::to_string(k) + "-forms", commute);
    auto mult = sigma_multiplicities(k);
    std::string md;
    for (const auto& [key, v] : mult) md += (md.empty() ? "" : ", ") + key + ":" + std::to_string(v);
    out.add(tag + ".d", 10, "sigma eigenvalue multiplicities on " + std::to_string(k) + "-forms", mult == sigma_mults.at(k), md);
    auto eqs = z8_restricted_equations(k, bh);
    for (std::size_t j = 0; j < eqs.size(); ++j) {
      const auto& eq = eqs[j];
      char id[8];
      std::snprintf(id, sizeof id, "%02zu", j + 1);
      out.add(tag + ".e" + id, 10, "sigma minimal equation " + eq.expected.to_string() + " on " + eq.label, eq.holds,
              "dim " + std::to_string(eq.dim) + ", computed " + eq.computed.to_string() + (eq.note.empty() ? "" : ", " + eq.note));
    }
    auto fx = verify_listed_vectors(k, bh);
    std::size_t good = 0;
    std::string first_bad;
    for (const auto& c : fx) {
      if (c.holds)
        ++good;
      else if (first_bad.empty())
        first_bad = c.name;
    }
    out.add(tag + ".f", 10, "listed eigenvectors and sigma orbits on " + std::to_string(k) + "-forms", good == fx.size(),
            std::to_string(good) + "/" + std::to_string(fx.size()) + (first_bad.empty() ? "" : ", first failure: " + first_bad));
  });
  for (const auto& p : parts) o.append(p);
  {
    // stated normalization on 4-forms: b = bhat / 6
    auto bp = Rational(1, z8_prefactor(4)) * z8_normalized_operator(4, S);
    RationalVector w = vec(omega);
    RationalVector bw = bp.matrix * w;
    RationalVector bbw = bp.matrix * bw;
    bool independent = rank(from_columns(w.size(), {w, bw})) == 2;
    o.add("10.g", 10, "b^2(Omega) = 2/9 Omega with b(Omega) independent of Omega", bbw == scaled(w, Q(2, 9)) && independent);
  }
  return o;
}

// ---------------------------------------------------------------- complex

LinearOperator derivation_operator(const KForm& J, int k) {
  const int D = J.dim();
  LinearOperator op(D, k, k);
  const auto B = basis(D, k);
  for (std::size_t col = 0; col < B.size(); ++col) {
    const auto idx = B[col].indices();
    for (int s = 0; s < k; ++s)
      for (int j = 1; j <= D; ++j) {
        // A e_i = sum_j J_ij e_j
        Rational a = J.component({idx[s], j});
        if (a == 0) continue;
        auto next = idx;
        next[s] = j;
        if (auto n = normalize_component(D, next, a)) op.matrix(basis_position(n->first), col) += n->second;
      }
  }
  return op;
}

VerificationOutcome suite_complex() {
  VerificationOutcome o{"complex", {}};
  struct Case {
    int n, k;
  };
  std::vector<Case> cases;
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) cases.push_back({n, k});
  std::vector<VerificationOutcome> parts(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto [n, k] = cases[i];
    const KForm J = complex_structure_form(n);
    auto& out = parts[i];
    char tag[32];
    std::snprintf(tag, sizeof tag, "11.n%d.k%d", n, k);
    auto b = build_duality_operator(J, k);
    auto rep = spectrum(b.op, "b_J|L" + std::to_string(k), stated_factors("complex" + std::to_string(n), k));
    bool dims = rep.dims_sum_ok;
    for (int q = 0; 2 * q <= k; ++q) {
      RationalPolynomial f = 2 * q == k ? T : t_plus_sq(Q(k - 2 * q, k));
      std::size_t want = 2 * q == k ? binomial(n, q) * binomial(n, q) : 2 * binomial(n, k - q) * binomial(n, q);
      dims = dims && rep.dim_of(f) == want;
    }
    out.add(std::string(tag) + ".a", 11,
            "complex structure n=" + std::to_string(n) + ", k=" + std::to_string(k) + ": minimal polynomial and dimensions",
            rep.expected_ok.value_or(false) && dims, rep.min_poly.to_string() + "; " + fmt_factors(rep));
    auto der = derivation_operator(J, k);
    out.add(std::string(tag) + ".b", 11, "b_J is 1/k times the derivation action of J", b.op.matrix == Q(1, k) * der.matrix);
  });
  for (const auto& p : parts) o.append(p);
  {
    auto J = complex_structure_form(2);
    RationalMatrix m(4, 4);
    for (int a = 1; a <= 4; ++a)
      for (int c = 1; c <= 4; ++c) m(a - 1, c - 1) = J.component({a, c});
    o.add("11.a", 11, "J squares to -id as a matrix", m * m == Rational(-1) * I(4));
  }
  for (auto [n, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 1}, std::pair{4, 3}}) {
    auto [ok, detail] = hodge_pairing(complex_structure_form(n), k);
    char id[32];
    std::snprintf(id, sizeof id, "11.z.n%d.k%d", n, k);
    o.add(id, 11, "* carries eigenspaces on " + std::to_string(k) + "-forms to " + std::to_string(2 * n - k) + "-forms with scaled eigenvalues (n=" + std::to_string(n) + ")",
          ok, detail);
  }
  return o;
}

// ---------------------------------------------------------------- quaternionic

VerificationOutcome suite_quaternionic() {
  VerificationOutcome o{"quaternionic", {}};
  std::map<int, Spec> spectra;
  for (int m : {1, 2}) {
    auto rep = spectrum(build_duality_operator(quaternionic_four_form(m), 2).op, "b_quat|L2");
    auto s = rational_spectrum(rep);
    spectra[m] = s.value_or(Spec{});
    o.add("12.m" + std::to_string(m) + ".a", 12, "quaternionic m=" + std::to_string(m) + " 2-form spectrum is rational", s.has_value(), fmt(s));
  }
  auto pattern = [](int m, const Rational& c) {
    Spec want;
    const std::size_t mult[3] = {static_cast<std::size_t>(m * (2 * m + 1)), static_cast<std::size_t>(3 * (2 * m * m - m - 1)), 3};
    const Rational val[3] = {1, Q(-1, 3), Q(-(2 * m + 1), 3)};
    for (int i = 0; i < 3; ++i)
      if (mult[i]) want[c * val[i]] += mult[i];
    return want;
  };
  std::set<Rational> fits;
  for (const auto& [v, dim] : spectra[2])
    for (const Rational& t : {Rational(1), Q(-1, 3), Q(-5, 3)}) {
      if (v == 0) continue;
      Rational c = v / t;
      if (pattern(1, c) == spectra[1] && pattern(2, c) == spectra[2]) fits.insert(c);
    }
  for (int m : {1, 2}) {
    bool ok = !fits.empty() && pattern(m, *fits.begin()) == spectra[m];
    o.add("12.m" + std::to_string(m) + ".b", 12,
          "m=" + std::to_string(m) + ": spectrum is c {1, -1/3, -(2m+1)/3} with multiplicities m(2m+1), 3(2m^2-m-1), 3", ok,
          fmt(spectra[m]));
  }
  std::optional<Rational> c;
  for (const auto& x : fits)
    if (!c || x > *c) c = x;
  o.add("12.c", 12, "the fitted scalar c is positive", c && *c > 0,
        fits.empty() ? "no scalar fits" : "fitted c = " + to_string(*c) + " (" + std::to_string(fits.size()) + " candidate)");
  return o;
}

// ---------------------------------------------------------------- hodge

VerificationOutcome suite_hodge() {
  VerificationOutcome o{"hodge", {}};
  const KForm theta = spin7_four_form();
  o.add("13.h.a", 13, "catalog norms <theta8,theta8> = 14, <theta7,theta7> = 7, <z8,z8> = 8",
        inner_product(theta, theta) == 14 && inner_product(g2_three_form(), g2_three_form()) == 7 &&
            inner_product(z8_four_form(), z8_four_form()) == 8);
  o.add("13.h.b", 13, "sigma fixes the cyclic form", sigma_operator(1, 4).apply(z8_four_form()) == z8_four_form());
  {
    const KForm hat = hodge_dual_lift(theta, 10);
    o.add("13.h.c", 13, "dual lift is an isometry", inner_product(hat, hat) == 14);
  }
  struct Item {
    std::string form;
    int k;
  };
  const std::vector<Item> items = {{"theta8", 2}, {"theta8", 3}, {"theta8", 4}, {"thetabar7", 2}, {"thetabar7", 3},
                                   {"z8", 2},     {"z8", 3},     {"z8", 4},     {"quat2", 2},     {"quat2", 4},
                                   {"complex3", 2}, {"complex4", 4}};
  std::vector<VerificationOutcome> parts(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    const auto& it = items[i];
    auto F = find_form(it.form)->form;
    auto checks = hodge_compat_check(F, it.k);
    char id[40];
    for (std::size_t j = 0; j < checks.size(); ++j) {
      std::snprintf(id, sizeof id, "13.h.%02zu.%zu", i + 1, j + 1);
      parts[i].add(id, 13, it.form + ", k=" + std::to_string(it.k) + ": " + checks[j].name, checks[j].holds, checks[j].detail);
    }
    if (2 * it.k != F.dim()) {
      auto [ok, detail] = hodge_pairing(F, it.k);
      std::snprintf(id, sizeof id, "13.h.%02zu.p", i + 1);
      parts[i].add(id, 13, it.form + ", k=" + std::to_string(it.k) + ": * carries eigenspaces with scaled eigenvalues", ok, detail);
    }
  });
  for (const auto& p : parts) o.append(p);
  return o;
}

// ---------------------------------------------------------------- properties

KForm random_form(std::mt19937_64& rng, int D, int k, int max_terms) {
  KForm F(D, k);
  const auto B = basis(D, k);
  const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms));
  for (int i = 0; i < n; ++i) {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 4);
    if (num == 0) num = 1;
    F.add(B[rng() % B.size()], Q(num, den));
  }
  return F;
}

VerificationOutcome suite_properties() {
  VerificationOutcome o{"properties", {}};
  struct Item {
    std::string name;
    int k;
  };
  std::vector<Item> items;
  for (const auto& e : catalog()) {
    const int l = e.form.degree();
    if (l % 2) continue;
    for (int k = l / 2; k <= e.D; ++k) items.push_back({e.name, k});
  }
  struct Result {
    bool trace = false, parity = false, balance = false, oracle = false;
    std::size_t samples = 0;
  };
  std::vector<Result> res(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    const auto& it = items[i];
    auto F = find_form(it.name)->form;
    auto b = build_duality_operator(F, it.k);
    const auto& M = b.op.matrix;
    auto& r = res[i];
    r.trace = M.trace() == 0;
    r.parity = M.transpose() == (b.m % 2 ? Rational(-1) : Rational(1)) * M;
    r.balance = spectrum(b.op, it.name).balance_ok;
    std::mt19937_64 rng(0x5eed0000ULL + i);
    r.oracle = true;
    for (int s = 0; s < 100; ++s) {
      KForm G = random_form(rng, F.dim(), it.k, 8);
      r.oracle = r.oracle && apply(b, G) == apply_direct(b, G);
      ++r.samples;
    }
  });
  auto summary = [&](auto pred, const std::string& what) {
    std::size_t good = 0;
    std::string bad;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (pred(res[i]))
        ++good;
      else if (bad.empty())
        bad = items[i].name + " k=" + std::to_string(items[i].k);
    }
    return std::pair{good == items.size(), std::to_string(good) + "/" + std::to_string(items.size()) + " " + what +
                                               (bad.empty() ? "" : ", first failure " + bad)};
  };
  auto [t_ok, t_d] = summary([](const Result& r) { return r.trace; }, "operators");
  o.add("13.p.a", 13, "trace zero for every catalog operator", t_ok, t_d);
  auto [p_ok, p_d] = summary([](const Result& r) { return r.parity; }, "operators");
  o.add("13.p.b", 13, "b is symmetric for even m and skew for odd m", p_ok, p_d);
  auto [b_ok, b_d] = summary([](const Result& r) { return r.balance; }, "operators");
  o.add("13.p.c", 13, "eigenvalue-dimension balance sums to zero", b_ok, b_d);
  auto [r_ok, r_d] = summary([](const Result& r) { return r.oracle && r.samples >= 100; }, "operators x 100 random forms");
  o.add("13.p.d", 13, "matrix action agrees with direct contraction", r_ok, r_d);

  // vanishing for odd or oversized degree
  std::mt19937_64 rng(0x0dd5eedULL);
  std::size_t cases = 0, good = 0;
  for (int i = 0; i < 24; ++i) {
    const int D = 6 + i % 3;
    const bool odd = i < 12;
    const int l = odd ? 1 + 2 * (i % 3) : 4 + 2 * (i % 2);
    const int k = odd ? 1 + static_cast<int>(rng() % (D - 1)) : static_cast<int>(rng() % (l / 2));
    KForm omega = random_form(rng, D, l, 6);
    if (omega.is_zero()) omega.add(basis(D, l)[0], 1);
    auto b = build_duality_operator(omega, k);
    KForm G = random_form(rng, D, k, 6);
    bool ok = b.degenerate && b.op.matrix.is_zero() && apply(b, G).is_zero();
    ok = ok && apply_direct(b, G).is_zero();
    ++cases;
    good += ok;
  }
  o.add("13.p.e", 13, "b vanishes for odd degree or degree above 2k", good == cases,
        std::to_string(good) + "/" + std::to_string(cases) + " random forms");
  return o;
}

using SuiteFn = VerificationOutcome (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"spin7", suite_spin7},     {"g2", suite_g2},       {"lifts", suite_lifts},
      {"z8", suite_z8},           {"complex", suite_complex}, {"quaternionic", suite_quaternionic},
      {"hodge", suite_hodge},     {"properties", suite_properties}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    v.push_back("all");
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

VerificationOutcome run_suite(const std::string& name) {
  if (!is_suite(name)) throw DomainError("unknown suite: " + name);
  if (name != "all") {
    for (const auto& [n, f] : registry())
      if (n == name) {
        auto o = f();
        o.sort();
        return o;
      }
  }
  const auto& reg = registry();
  std::vector<VerificationOutcome> parts(reg.size());
  parallel_for(reg.size(), [&](std::size_t i) { parts[i] = reg[i].second(); });
  VerificationOutcome all{"all", {}};
  for (const auto& p : parts) all.append(p);
  all.sort();
  return all;
}

std::optional<std::vector<RationalPolynomial>> stated_factors(const std::string& form, int k) {
  if (form == "theta8") {
    if (k == 2) return std::vector{lin(2), lin(-6)};
    if (k == 3) return std::vector{lin(-4), lin(Q(2, 3))};
    if (k == 4) return std::vector{T, lin(-2), lin(-4), lin(Q(2, 3))};
  } else if (form == "thetabar7") {
    if (k == 2) return std::vector{lin(2), lin(-4)};
    if (k == 3) return std::vector{lin(-4), lin(-2), lin(Q(2, 3))};
  } else if (form == "theta8hat") {
    if (k == 5) return std::vector{T, t_plus_sq(Q(32, 5)), t_plus_sq(Q(18, 5)), t_plus_sq(Q(6, 5)), t_plus_sq(Q(3, 5))};
    if (k == 4) return std::vector{T, P({81, 0, 1}), P({Q(9, 4), 0, 1}), P({72, 0, 1})};
    if (k == 3) return std::vector{T, P({324, 0, 1}), P({36, 0, 1}), P({252, 0, 1})};
  } else if (form == "z8") {
    if (k >= 2 && k <= 4) {
      auto s = z8_scalar();
      if (!s) return std::nullopt;
      // stated factors belong to c_k b / s
      std::vector<RationalPolynomial> out;
      for (const auto& f : z8_stated_factors(k)) out.push_back(f.rescale(Rational(z8_prefactor(k)) / *s).monic());
      return out;
    }
  } else if (form.rfind("complex", 0) == 0 && form.size() == 8) {
    const int n = form[7] - '0';
    if (n >= 1 && n <= 4 && k >= 1 && k <= n) {
      std::vector<RationalPolynomial> out;
      for (int q = 0; 2 * q <= k; ++q) out.push_back(2 * q == k ? T : t_plus_sq(Q(k - 2 * q, k)));
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace formdual
