#include "formdual/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "formdual/errors.hpp"

namespace formdual {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::linear_root(const Rational& r) { return RationalPolynomial({-r, 1}); }

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::monic() const {
  if (c_.empty()) return *this;
  Rational l = c_.back();
  std::vector<Rational> v(c_);
  for (auto& x : v) x /= l;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::rescale(const Rational& s) const {
  std::vector<Rational> v(c_);
  Rational p = 1;
  for (auto& x : v) {
    x *= p;
    p *= s;
  }
  return RationalPolynomial(std::move(v));
}

bool RationalPolynomial::is_even() const {
  for (std::size_t i = 1; i < c_.size(); i += 2)
    if (c_[i] != 0) return false;
  return true;
}

RationalPolynomial RationalPolynomial::even_part_in_square() const {
  if (!is_even()) throw DomainError("polynomial is not even");
  std::vector<Rational> v;
  for (std::size_t i = 0; i < c_.size(); i += 2) v.push_back(c_[i]);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::substitute_square() const {
  if (c_.empty()) return *this;
  std::vector<Rational> v(2 * c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[2 * i] = c_[i];
  return RationalPolynomial(std::move(v));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || a != 1) os << formdual::to_string(a);
    if (i > 0) {
      if (a != 1) os << " ";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a + Rational(-1) * b;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& a) {
  std::vector<Rational> v(a.c_);
  for (auto& x : v) x *= s;
  return RationalPolynomial(std::move(v));
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  const Rational lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] / lb;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  return {RationalPolynomial(std::move(q)), RationalPolynomial(std::move(r))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RationalPolynomial lcm(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return divmod(a * b, gcd(a, b)).first.monic();
}

RationalPolynomial product(const std::vector<RationalPolynomial>& factors) {
  RationalPolynomial p = RationalPolynomial::constant(1);
  for (const auto& f : factors) p = p * f;
  return p;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, int>> fac;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    fac.emplace_back(d, e);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : fac) {
    std::size_t m = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < m; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const RationalPolynomial& p) {
  std::vector<RationalRoot> out;
  if (p.degree() <= 0) return out;
  RationalPolynomial q = p;
  int zero_mult = 0;
  while (q.coeff(0) == 0) {
    q = divmod(q, RationalPolynomial::monomial(1)).first;
    ++zero_mult;
  }
  if (zero_mult) out.push_back({0, zero_mult});
  if (q.degree() <= 0) return out;
  // primitive integer form
  mpz_class den = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  mpz_class a0 = Rational(q.coeff(0) * den).get_num();
  mpz_class an = Rational(q.leading() * den).get_num();
  auto num = divisors(a0);
  auto dnm = divisors(an);
  std::vector<Rational> cands;
  for (const auto& a : num)
    for (const auto& b : dnm) {
      Rational r(a, b);
      r.canonicalize();
      cands.push_back(r);
      cands.push_back(-r);
    }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const auto& r : cands) {
    int m = 0;
    while (q.degree() > 0 && q(r) == 0) {
      q = divmod(q, RationalPolynomial::linear_root(r)).first;
      ++m;
    }
    if (m) out.push_back({r, m});
  }
  std::sort(out.begin(), out.end(), [](const RationalRoot& x, const RationalRoot& y) { return x.value < y.value; });
  return out;
}

}  // namespace formdual
