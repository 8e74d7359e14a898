#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formdual/polynomial.hpp"
#include "formdual/report.hpp"

namespace formdual {

// spin7, g2, lifts, z8, complex, quaternionic, hodge, properties; "all" runs every one of them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
VerificationOutcome run_suite(const std::string& name);

// Stated factorization of the minimal polynomial of b_omega on Lambda^k for catalog forms where one is known.
std::optional<std::vector<RationalPolynomial>> stated_factors(const std::string& form, int k);

}  // namespace formdual
