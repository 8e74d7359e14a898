#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "formdual/linear_operator.hpp"

namespace formdual {

// Global normalization of the duality contraction, fixed once by the 3-form spectrum of the spin(7) form.
inline const Rational kKappa = 1;

struct DualityOperator {
  KForm omega;
  int k = 0;
  int m = 0;  // half of deg omega (0 when the degree is odd)
  LinearOperator op;
  bool degenerate = false;  // odd degree, or fewer than m slots: the operator vanishes
};

// p-fold contraction of omega's leading slots with F's leading slots, weight-one antisymmetrized output.
LinearOperator contraction_operator(const KForm& omega, int k_in, int p);
// Same map on a single form through interior products and wedges; independent of the matrix assembly.
KForm contract_direct(const KForm& omega, const KForm& F, int p);

DualityOperator build_duality_operator(const KForm& omega, int k);
KForm apply(const DualityOperator& b, const KForm& F);
KForm apply_direct(const DualityOperator& b, const KForm& F);

enum class ContractionVariant { d, d_tilde, c, c_tilde, e, e_tilde };
LinearOperator contraction_map(const KForm& theta, ContractionVariant v);
const char* variant_name(ContractionVariant v);

// Spectral projectors of an order-two operator with roots beta1 != beta2.
std::pair<LinearOperator, LinearOperator> order2_projections(const DualityOperator& b, const Rational& beta1,
                                                             const Rational& beta2);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string detail;  // first failing entry, when any
};

// Hodge compatibility of b on Lambda^k and Lambda^(D-k); for D = 4m, k = 2m also *b(F) = b_{*omega}(F) = b(*F).
std::vector<IdentityCheck> hodge_compat_check(const KForm& omega, int k);

// The four contraction identities of Theta (x) Theta, entrywise.
std::vector<IdentityCheck> theta_trace_identities(const KForm& theta);

struct SquaredDecomposition {
  Rational a = 0, b = 0, c = 0;
  bool consistent = false;
  bool residual_zero = false;
};
SquaredDecomposition theta_squared_decomposition(const KForm& theta);

// Operator F -> Alt_out( sum over ordered input tuples of kernel(out, in) F_in ), weight-one on the output.
using TensorKernel = std::function<Rational(const int* out, const int* in)>;
LinearOperator tensor_expression_operator(int D, int k_in, int k_out, const TensorKernel& kernel);

// Dense table of the components of a form over all ordered index tuples (0-based).
class ComponentTable {
 public:
  explicit ComponentTable(const KForm& F);
  const Rational& operator()(const int* idx) const;
  const Rational& at(std::initializer_list<int> idx) const;
  int dim() const { return D_; }
  int degree() const { return k_; }

 private:
  int D_, k_;
  std::vector<Rational> v_;
};

}  // namespace formdual
