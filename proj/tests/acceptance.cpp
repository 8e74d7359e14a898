#include <chrono>
#include <cstdio>
#include <map>
#include <string>

#include "formdual/suites.hpp"

using namespace formdual;

namespace {

const std::map<int, const char*> kTitles = {
    {1, "calibration: 3-form spectrum {-4:8, 2/3:48} and the order-two relation"},
    {2, "2-form spectra of spin(7) {2:21, -6:7} and G2 {2:14, -4:7}"},
    {3, "4-form minimal polynomial, dimensions, b(theta) = -4 theta, anti-self-dual kernel, no -3"},
    {4, "trace identities of theta (x) theta and the full contraction 336"},
    {5, "operator chain b^2..b^5 on 4-forms and the annihilating quintic"},
    {6, "G2 3-form minimal polynomial and dimensions"},
    {7, "contraction maps d, c, e and their tildes"},
    {8, "lifted spectra, block sparsity and block scalars on R^10"},
    {9, "trivial lift: multiplied dimensions and non-perfectness"},
    {10, "cyclic Z8 form: spectra, sigma multiplicities, restricted equations, fixtures"},
    {11, "complex structures: spectra, derivation identity, Hodge pairing"},
    {12, "quaternionic 2-form spectra up to one positive scalar"},
    {13, "property suite: trace, parity, balance, oracle agreement, vanishing"},
};

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationOutcome all = run_suite("all");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  bool every = true;
  for (const auto& [n, title] : kTitles) {
    std::size_t total = 0, passed = 0;
    for (const auto& c : all.checks)
      if (c.criterion == n) {
        ++total;
        passed += c.pass;
      }
    const bool ok = total > 0 && passed == total;
    every = every && ok;
    std::printf("criterion %2d: %s  (%zu/%zu checks)  %s\n", n, ok ? "PASS" : "FAIL", passed, total, title);
    for (const auto& c : all.checks)
      if (c.criterion == n && !c.pass)
        std::printf("    failed [%s] %s%s%s\n", c.id.c_str(), c.anchor.c_str(), c.detail.empty() ? "" : " -- ",
                    c.detail.c_str());
  }
  std::size_t unassigned = 0;
  for (const auto& c : all.checks) unassigned += c.criterion < 1 || c.criterion > 13;
  if (unassigned) {
    std::printf("%zu checks carry no criterion number\n", unassigned);
    every = false;
  }
  std::printf("suite all: %zu checks in %.1f s\n", all.checks.size(), secs);
  return every ? 0 : 1;
}
