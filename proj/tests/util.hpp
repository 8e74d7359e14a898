#pragma once

#include <random>

#include "formdual/exterior.hpp"

namespace testutil {

// Small-integer coefficients on a random subset of the basis.
inline formdual::KForm random_form(int D, int k, std::uint64_t seed, double density = 0.5) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::bernoulli_distribution keep(density);
  formdual::KForm F(D, k);
  for (const auto& I : formdual::basis(D, k))
    if (keep(rng)) F.add(I, coeff(rng));
  return F;
}

}  // namespace testutil
