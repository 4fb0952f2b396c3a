#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "fusionkit/modact.hpp"

namespace fk {

struct DimFixture {
  Kind kind = Kind::sl2;
  std::string graph;
  std::vector<mpz_class> d_x;
  std::string source;
};

struct DimReport {
  std::string graph;
  std::vector<mpz_class> d_n;
  mpz_class d_H, d_B;
  std::optional<std::vector<mpz_class>> d_x_fixture;
  std::optional<mpz_class> d_V, d_B_hat;
};

DimReport dim_report(const AnnularFamily& fam);
DimReport dim_report(const AnnularFamily& fam, const DimFixture& fx);

struct ClosedPrediction {
  bool available = false;  // false means "no closed formula"
  std::optional<mpz_class> d_H, d_B;
  // predicted d_n where the closed form gives one (sl2 A series)
  std::optional<std::vector<mpz_class>> d_n;
};

// series: sl2 "A", "D_even", "D_odd", "E_6", "E_7", "E_8"; sl3 "A", "Ac", "D" (k != 0 mod 3), "Dc" (k != 0 mod 3)
ClosedPrediction closed_formula_oracle(Kind kind, const std::string& series, int k);

// d_H = kappa (kappa + 1) r / 6 for sl2 module graphs
mpz_class sl2_dH_rule(int kappa, int r);

// A X = Lambda with X = sum_n F_n
bool weyl_relation_check(const AnnularFamily& fam);

struct BlockIdentityResult {
  bool closed_form = true, recurrence = true;
  int checked = 0;
  bool ok() const { return closed_form && recurrence; }
};
BlockIdentityResult sl3_block_identities(const FusionSystem& sys);

enum class FixtureVerdict { pass, fail, no_fixture };
struct FixtureCheck {
  FixtureVerdict verdict = FixtureVerdict::no_fixture;
  std::string detail;
};
// gap is the tabulated d_V - d_H; empty gap means the table has no value
FixtureCheck dv_fixture_check(const DimReport& report, const std::optional<mpz_class>& gap);

std::vector<DimFixture> load_dim_fixtures(const std::string& dir);
std::optional<DimFixture> find_fixture(const std::vector<DimFixture>& all, Kind kind, const std::string& graph);

}  // namespace fk
