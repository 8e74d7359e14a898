#include "formdual/catalog.hpp"

#include <cctype>

#include "formdual/errors.hpp"
#include "formdual/lifts.hpp"

namespace formdual {

namespace {

KForm from_index_list(int D, const std::vector<std::vector<int>>& list) {
  KForm F(D, static_cast<int>(list.front().size()));
  for (const auto& idx : list) F.add_component(idx, 1);
  return F;
}

}  // namespace

KForm g2_three_form() {
  return from_index_list(7, {{1, 2, 3}, {4, 3, 5}, {4, 7, 1}, {5, 1, 6}, {5, 7, 2}, {6, 2, 4}, {6, 7, 3}});
}

KForm g2_four_form() {
  return from_index_list(
      7, {{1, 2, 4, 5}, {1, 2, 7, 6}, {1, 3, 4, 6}, {1, 3, 5, 7}, {2, 3, 5, 6}, {2, 4, 3, 7}, {4, 5, 6, 7}});
}

KForm spin7_four_form() {
  return from_index_list(8, {{1, 2, 4, 5},
                             {1, 2, 7, 6},
                             {1, 3, 4, 6},
                             {1, 3, 5, 7},
                             {2, 3, 5, 6},
                             {2, 4, 3, 7},
                             {4, 5, 6, 7},
                             {1, 2, 3, 8},
                             {4, 3, 5, 8},
                             {4, 7, 1, 8},
                             {5, 1, 6, 8},
                             {5, 7, 2, 8},
                             {6, 2, 4, 8},
                             {6, 7, 3, 8}});
}

KForm complex_structure_form(int n) {
  if (n < 1 || 2 * n > kMaxDim) throw DomainError("complex structure: n out of range");
  KForm J(2 * n, 2);
  for (int a = 1; a <= n; ++a) J.add_component({2 * a - 1, 2 * a}, 1);
  return J;
}

KForm quaternionic_kahler_form(int m, int a) {
  if (m < 1 || 4 * m > kMaxDim) throw DomainError("quaternionic form: m out of range");
  KForm w(4 * m, 2);
  for (int b = 1; b <= m; ++b) {
    const int p = 4 * b - 3, q = 4 * b - 2, r = 4 * b - 1, s = 4 * b;
    switch (a) {
      case 1:
        w.add_component({p, q}, 1);
        w.add_component({r, s}, 1);
        break;
      case 2:
        w.add_component({p, r}, 1);
        w.add_component({q, s}, -1);
        break;
      case 3:
        w.add_component({p, s}, 1);
        w.add_component({q, r}, 1);
        break;
      default:
        throw DomainError("quaternionic form: a must be 1, 2 or 3");
    }
  }
  return w;
}

KForm quaternionic_four_form(int m) {
  KForm O(4 * m, 4);
  for (int a = 1; a <= 3; ++a) {
    KForm w = quaternionic_kahler_form(m, a);
    O += wedge(w, w);
  }
  return O;
}

KForm z8_four_form() {
  KForm O(8, 4);
  for (int s = 0; s < 8; ++s) {
    std::vector<int> idx;
    for (int j = 1; j <= 4; ++j) idx.push_back((j + s - 1) % 8 + 1);
    O.add_component(idx, 1);
  }
  return O;
}

KForm z8_omega_partner() { return form_from_string(8, 4, "e1256 - e1458 + e2367 + e3478"); }

KForm plane_volume_form(int D) { return basis_form(D, {D - 1, D}); }

KForm form_from_string(int D, int k, const std::string& s) {
  KForm F(D, k);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  while (true) {
    skip();
    if (i >= s.size()) break;
    Rational c = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') c = -1;
      ++i;
      skip();
    }
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    if (j > i) {
      c *= parse_rational(s.substr(i, j - i));
      i = j;
      skip();
    }
    if (i >= s.size() || s[i] != 'e') throw DomainError("form string: expected e<indices> in '" + s + "'");
    ++i;
    std::vector<int> idx;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) idx.push_back(s[i++] - '0');
    F.add_component(idx, c);
  }
  return F;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"theta7", 7, g2_three_form(), "G2-invariant 3-form"});
    v.push_back({"thetabar7", 7, g2_four_form(), "G2-invariant 4-form, Hodge dual of theta7"});
    v.push_back({"theta8", 8, spin7_four_form(), "spin(7)-invariant self-dual 4-form"});
    v.push_back({"theta8hat", 10, hodge_dual_lift(spin7_four_form(), 10),
                 "Hodge-dual lift of theta8 to R^10, spin(7)+so(2)-invariant"});
    v.push_back({"theta8lift", 10, trivial_lift(spin7_four_form(), 10), "trivial lift of theta8 to R^10"});
    v.push_back({"eps10", 10, plane_volume_form(10), "volume form of the e9-e10 plane"});
    for (int n = 1; n <= 4; ++n)
      v.push_back({"complex" + std::to_string(n), 2 * n, complex_structure_form(n), "standard complex structure"});
    for (int m = 1; m <= 2; ++m)
      v.push_back({"quat" + std::to_string(m), 4 * m, quaternionic_four_form(m), "sum of squares of a hypercomplex triple"});
    v.push_back({"z8", 8, z8_four_form(), "Z8-invariant cyclic 4-form"});
    v.push_back({"z8omega", 8, z8_omega_partner(), "rational part of the Z8 partner form (partner = sqrt2 * this)"});
    return v;
  }();
  return entries;
}

std::optional<CatalogEntry> find_form(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace formdual
