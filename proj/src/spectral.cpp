#include "formdual/spectral.hpp"

#include <sstream>

#include "formdual/errors.hpp"
#include "formdual/minimal_polynomial.hpp"
#include "formdual/parallel.hpp"

namespace formdual {

std::string QuadraticSurd::to_string() const {
  std::ostringstream os;
  if (b == 0) return formdual::to_string(a);
  if (a != 0) os << formdual::to_string(a) << (b < 0 ? " - " : " + ");
  else if (b < 0) os << "-";
  Rational ab = abs(b);
  if (ab != 1) os << formdual::to_string(ab) << "*";
  os << "sqrt(" << d.get_str() << ")";
  return os.str();
}

std::string EigenvalueDescriptor::kind_name() const {
  switch (kind) {
    case Kind::rational: return "rational";
    case Kind::surd: return "surd";
    case Kind::imaginary: return "imaginary";
    case Kind::quartic: return "quartic";
    case Kind::family: return "family";
  }
  return "?";
}

std::string EigenvalueDescriptor::to_string() const {
  switch (kind) {
    case Kind::rational: return formdual::to_string(q);
    case Kind::surd: return surd.to_string();
    case Kind::imaginary: return "+-i*" + (surd.b == 0 ? formdual::to_string(surd.a) : surd.to_string());
    case Kind::quartic:
      if (denested) return "+-sqrt(" + formdual::to_string(A) + ") +- sqrt(" + formdual::to_string(B) + ")";
      return "roots of " + factor.to_string();
    case Kind::family: return "roots of " + factor.to_string();
  }
  return "?";
}

std::size_t SpectrumReport::dim_of(const RationalPolynomial& f) const {
  for (const auto& x : factors)
    if (x.factor == f.monic()) return x.dim;
  return 0;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

QuadraticSurd sqrt_surd(const Rational& q) {
  if (q <= 0) throw DomainError("sqrt_surd needs a positive rational");
  mpz_class N = q.get_num() * q.get_den();
  mpz_class s = 1;
  for (mpz_class p = 2; p * p <= N; ++p)
    while (N % (p * p) == 0) {
      N /= p * p;
      s *= p;
    }
  QuadraticSurd r;
  r.b = Rational(s, q.get_den());
  r.b.canonicalize();
  r.d = N;
  if (N == 1) {
    r.a = r.b;
    r.b = 0;
  }
  return r;
}

std::vector<RationalRoot> rational_root_check(const RationalPolynomial& p) { return rational_roots(p); }

namespace {

RationalPolynomial derivative(const RationalPolynomial& p) {
  std::vector<Rational> c;
  for (int i = 1; i <= p.degree(); ++i) c.push_back(i * p.coeffs()[i]);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial quad(const Rational& a, const Rational& b) { return RationalPolynomial({b, a, 1}); }

}  // namespace

std::vector<RationalPolynomial> split_factors(const RationalPolynomial& p_in) {
  std::vector<RationalPolynomial> out;
  RationalPolynomial q = p_in.monic();
  if (q.degree() <= 0) return out;
  for (const auto& r : rational_roots(q))
    for (int i = 0; i < r.multiplicity; ++i) {
      out.push_back(RationalPolynomial::linear_root(r.value));
      q = divmod(q, out.back()).first;
    }
  if (q.degree() <= 0) return out;
  if (!q.is_even()) {
    out.push_back(q.monic());
    return out;
  }
  RationalPolynomial Q = q.even_part_in_square();
  for (const auto& r : rational_roots(Q))
    for (int i = 0; i < r.multiplicity; ++i) {
      out.push_back(quad(0, -r.value));
      Q = divmod(Q, RationalPolynomial::linear_root(r.value)).first;
    }
  if (Q.degree() <= 0) return out;
  Q = Q.monic();
  if (Q.degree() == 2) {
    const Rational P = Q.coeff(1), R = Q.coeff(0);
    if (auto w = rational_sqrt(R)) {
      for (Rational b : {*w, Rational(-*w)}) {
        if (auto a = rational_sqrt(2 * b - P); a && *a != 0) {
          out.push_back(quad(*a, b));
          out.push_back(quad(-*a, b));
          return out;
        }
      }
    }
  }
  out.push_back(Q.substitute_square());
  return out;
}

SpectrumReport spectrum(const LinearOperator& op, const std::string& name,
                        const std::optional<std::vector<RationalPolynomial>>& expected_factors) {
  if (!op.is_square()) throw DomainError("spectrum: operator is not square");
  const RationalMatrix& M = op.matrix;
  SpectrumReport rep;
  rep.name = name;
  rep.ambient = M.rows();
  rep.min_poly = minimal_polynomial(M);
  rep.squarefree = gcd(rep.min_poly, derivative(rep.min_poly)).degree() == 0;
  rep.trace_zero = M.trace() == 0;

  std::vector<RationalPolynomial> pieces;
  if (expected_factors) {
    rep.expected_ok = product(*expected_factors).monic() == rep.min_poly;
    if (!*rep.expected_ok)
      rep.detail = "expected " + product(*expected_factors).monic().to_string() + ", computed " +
                   rep.min_poly.to_string();
    for (const auto& f : *expected_factors)
      for (auto& piece : split_factors(f)) pieces.push_back(piece);
  } else {
    pieces = split_factors(rep.min_poly);
  }

  struct Work {
    std::size_t dim = 0;
    Rational restricted_trace = 0;
    bool need_trace = false;
  };
  std::vector<Work> work(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& f = pieces[i];
    if (f.degree() == 2) {
      const Rational P = f.coeff(1), R = f.coeff(0);
      work[i].need_trace = P * P / 4 - R > 0;
    }
  }
  parallel_for(pieces.size(), [&](std::size_t i) {
    RationalMatrix fm = poly_eval_matrix(pieces[i], M);
    if (work[i].need_trace) {
      auto K = kernel_basis(fm);
      work[i].dim = K.size();
      if (!K.empty()) work[i].restricted_trace = restrict_to(M, K).matrix.trace();
    } else {
      work[i].dim = M.rows() - rank(fm);
    }
  });

  std::size_t total = 0;
  Rational balance = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& f = pieces[i];
    const std::size_t dim = work[i].dim;
    rep.factors.push_back({f, dim});
    total += dim;
    const int deg = f.degree();
    balance += -f.coeff(deg - 1) * Rational(dim) / deg;
    rep.order += deg;
    if (expected_factors && dim == 0) {
      rep.expected_ok = false;
      rep.detail += (rep.detail.empty() ? "" : "; ") + std::string("factor ") + f.to_string() + " has trivial kernel";
    }
    EigenvalueDescriptor ev;
    ev.factor = f;
    if (deg == 1) {
      ev.kind = EigenvalueDescriptor::Kind::rational;
      ev.q = -f.coeff(0);
      rep.eigen.push_back({ev, dim});
    } else if (deg == 2) {
      const Rational P = f.coeff(1), R = f.coeff(0);
      const Rational disc = P * P / 4 - R;
      if (disc > 0) {
        ev.kind = EigenvalueDescriptor::Kind::surd;
        QuadraticSurd s = sqrt_surd(disc);
        s.a = -P / 2;
        // conjugate roots share multiplicity exactly when the restricted trace is the rational part times dim
        if (work[i].restricted_trace != s.a * Rational(dim) || dim % 2) rep.split_ok = false;
        EigenvalueDescriptor lo = ev;
        ev.surd = s;
        lo.surd = s;
        lo.surd.b = -s.b;
        rep.eigen.push_back({ev, dim / 2});
        rep.eigen.push_back({lo, dim / 2});
      } else if (P == 0) {
        ev.kind = EigenvalueDescriptor::Kind::imaginary;
        ev.surd = sqrt_surd(R);
        rep.eigen.push_back({ev, dim});
      } else {
        ev.kind = EigenvalueDescriptor::Kind::family;
        rep.eigen.push_back({ev, dim});
      }
    } else if (deg == 4 && f.is_even()) {
      ev.kind = EigenvalueDescriptor::Kind::quartic;
      const Rational P = f.coeff(2), R = f.coeff(0);
      if (auto w = rational_sqrt(R)) {
        ev.A = (-P / 2 + *w) / 2;
        ev.B = (-P / 2 - *w) / 2;
        ev.denested = ev.A >= 0 && ev.B >= 0;
      }
      rep.eigen.push_back({ev, dim});
    } else {
      ev.kind = EigenvalueDescriptor::Kind::family;
      rep.eigen.push_back({ev, dim});
    }
  }
  rep.dims_sum_ok = total == rep.ambient;
  rep.balance_ok = balance == 0 && rep.trace_zero;
  return rep;
}

bool perfectness(SpectrumReport& report, int irreducible_count) {
  report.perfect = report.order == irreducible_count;
  return *report.perfect;
}

}  // namespace formdual
