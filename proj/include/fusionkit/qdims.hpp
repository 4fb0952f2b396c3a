#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "fusionkit/modact.hpp"
#include "fusionkit/modular.hpp"

namespace fk {

std::vector<CycReal> vertex_qdims(const AnnularFamily& fam, const FusionSystem& sys);

struct OrderReport {
  std::string graph;
  std::vector<CycReal> mu;
  CycReal order_E;         // sum mu_a^2
  CycReal order_quotient;  // |A/E| = dim Gamma_0
  std::optional<CycReal> order_J;
  std::optional<std::vector<int>> J_vertices;
  std::string warning;
};

OrderReport order_report(const AnnularFamily& fam, const FusionSystem& sys, const ModularInvariant& inv);

struct OrderChecks {
  bool product = false;      // |A/E| |E| = |A|
  bool self_fusion = true;   // |A|/|E| = |E|/|J|
  bool J_sum = true;         // |A| = sum_J |Gamma_c|^2
  bool eigen = false;        // sum_b G_ab mu_b = mu(generator) mu_a, exact
};
OrderChecks check_orders(const AnnularFamily& fam, const FusionSystem& sys, const OrderReport& rep);

struct TrigResult {
  double sum = 0, expected = 0;
  bool numeric = false, exact = false;
  bool ok(double tol = 1e-9) const { return numeric && exact && std::abs(sum - expected) < tol; }
};
TrigResult trig_identity_check(const FusionSystem& sys, const ModularInvariant& inv, double tol = 1e-9);

struct DiscriminantReport {
  mpz_class D;
  mpz_class closed_form;
  CycReal prod_mu_sq;
  double prod_mu_sq_closed = 0;
  std::optional<mpz_class> charpoly_disc;
  std::vector<mpz_class> charpoly;  // det(s I - G), lowest degree first
  bool integral = false;
};
DiscriminantReport discriminant_suite(const FusionSystem& sys);

// det(sI - M) by Faddeev-LeVerrier, lowest degree first
std::vector<mpz_class> char_poly(const IMat& M);
mpz_class poly_discriminant(const std::vector<mpz_class>& p);

}  // namespace fk
