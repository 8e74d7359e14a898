#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formdual/exterior.hpp"

namespace formdual {

struct CatalogEntry {
  std::string name;
  int D = 0;
  KForm form;
  std::string note;
};

KForm g2_three_form();    // D = 7
KForm g2_four_form();     // D = 7, built from its own index list
KForm spin7_four_form();  // D = 8
KForm complex_structure_form(int n);  // D = 2n
KForm quaternionic_kahler_form(int m, int a);  // a in 1..3, D = 4m
KForm quaternionic_four_form(int m);           // D = 4m
KForm z8_four_form();     // D = 8
// Rational partner w0 of the cyclic form: the partner itself is sqrt(2) * w0.
KForm z8_omega_partner();
KForm plane_volume_form(int D);  // e_{D-1} ^ e_D

// Terms like "e12 - e34 + 2 e567"; single-digit indices, any order (signs normalized).
KForm form_from_string(int D, int k, const std::string& s);

const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> find_form(const std::string& name);

}  // namespace formdual
