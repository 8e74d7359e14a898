#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formdual/linear_operator.hpp"
#include "formdual/polynomial.hpp"

namespace formdual {

// a + b sqrt(d), d squarefree positive integer (d = 1 only when b = 0 is not wanted: then it is rational).
struct QuadraticSurd {
  Rational a = 0, b = 0;
  mpz_class d = 1;
  std::string to_string() const;
};

struct EigenvalueDescriptor {
  enum class Kind { rational, surd, imaginary, quartic, family };
  Kind kind = Kind::rational;
  Rational q = 0;       // rational
  QuadraticSurd surd;   // surd value, or mu for the pair +-i mu
  RationalPolynomial factor;  // the Q-irreducible factor carrying this value
  // quartic: roots +-sqrt(A) +-sqrt(B) when denested
  bool denested = false;
  Rational A = 0, B = 0;

  std::string kind_name() const;
  std::string to_string() const;
};

struct EigenEntry {
  EigenvalueDescriptor value;
  std::size_t dim = 0;  // real dimension
};

struct FactorDim {
  RationalPolynomial factor;
  std::size_t dim = 0;  // dim ker factor(op)
};

struct SpectrumReport {
  std::string name;
  std::size_t ambient = 0;
  RationalPolynomial min_poly;
  std::vector<FactorDim> factors;
  std::vector<EigenEntry> eigen;
  bool squarefree = false;
  bool dims_sum_ok = false;
  bool trace_zero = false;
  bool balance_ok = false;
  bool split_ok = true;  // conjugate surd multiplicities consistent with restricted traces
  int order = 0;
  std::optional<bool> perfect;
  std::optional<bool> expected_ok;  // product of supplied factors equals the minimal polynomial, all kernels nontrivial
  std::string detail;

  std::size_t dim_of(const RationalPolynomial& factor) const;
};

// Factors of p over Q found by rational roots, the even substitution u = t^2 and the symmetric quartic split.
// Anything beyond that is returned as one leftover factor.
std::vector<RationalPolynomial> split_factors(const RationalPolynomial& p);

SpectrumReport spectrum(const LinearOperator& op, const std::string& name,
                        const std::optional<std::vector<RationalPolynomial>>& expected_factors = std::nullopt);
bool perfectness(SpectrumReport& report, int irreducible_count);
std::vector<RationalRoot> rational_root_check(const RationalPolynomial& p);

// Whether a rational is a square of a rational; returns the nonnegative root.
std::optional<Rational> rational_sqrt(const Rational& q);
// q = r^2 d with d squarefree integer, r rational > 0 (q > 0)
QuadraticSurd sqrt_surd(const Rational& q);

}  // namespace formdual
