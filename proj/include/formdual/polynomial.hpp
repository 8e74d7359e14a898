#pragma once

#include <string>
#include <utility>
#include <vector>

#include "formdual/rational.hpp"

namespace formdual {

// Polynomial over Q in one variable t, constant term first; no trailing zeros.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(int degree, const Rational& c = 1);
  static RationalPolynomial linear_root(const Rational& r);  // t - r

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational operator()(const Rational& x) const;

  RationalPolynomial monic() const;
  // p(s t)
  RationalPolynomial rescale(const Rational& s) const;
  // the polynomial q with q(t^2) = p(t), when p is even
  bool is_even() const;
  RationalPolynomial even_part_in_square() const;
  RationalPolynomial substitute_square() const;  // p(t^2)

  std::string to_string(const std::string& var = "t") const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& a);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial lcm(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial product(const std::vector<RationalPolynomial>& factors);

struct RationalRoot {
  Rational value;
  int multiplicity;
};
// Exact rational roots via divisor enumeration on the primitive integer form.
std::vector<RationalRoot> rational_roots(const RationalPolynomial& p);

}  // namespace formdual
