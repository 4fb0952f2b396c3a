#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusionkit/fusion.hpp"
#include "fusionkit/graphs.hpp"
#include "fusionkit/intmat.hpp"

namespace fk {

// coeff * (sum_{m} chi_m) * conj(sum_{n} chi_n)
struct InvariantTerm {
  std::vector<int> m, n;
  int64_t coeff = 1;
};

struct ModularInvariant {
  std::string graph;
  Kind kind = Kind::sl2;
  int k = 0;
  IMat Z;
  std::vector<InvariantTerm> terms;
  bool conjugated = false;  // Z = (expanded terms) * C
  std::string source;

  int64_t r_E() const { return Z.trace(); }
  int64_t r_O() const;
};

class InvariantIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

IMat expand_terms(const FusionSystem& sys, const std::vector<InvariantTerm>& terms, bool conjugated);
// parse "3" (sl2) or "(p,q)" / "p,q" (sl3)
int parse_label(const FusionSystem& sys, const std::string& s);

ModularInvariant invariant_from_json(const FusionSystem& sys, const nlohmann::json& j, const std::string& where = "");
nlohmann::json invariant_to_json(const FusionSystem& sys, const ModularInvariant& inv);

// invariant attached to a catalog graph
ModularInvariant invariant_for(const FusionSystem& sys, const GraphSpec& g, const std::string& dir = data_dir());
std::string invariant_file_path(const std::string& graph_file, const std::string& dir = data_dir());

struct InvariantCatalog {
  std::vector<ModularInvariant> invariants;
  std::vector<std::pair<std::string, std::string>> unavailable;
};
InvariantCatalog invariant_catalog(Kind kind, int max_level, const std::string& dir = data_dir());

std::string presentation_string(const FusionSystem& sys, const ModularInvariant& inv);

struct ModularBlocks {
  std::vector<std::vector<int>> blocks;  // exponents, sorted; blocks[origin] contains 0
  std::vector<int64_t> multiplicity;     // Z_nn of the block's exponents
  int origin = 0;
};
ModularBlocks modular_blocks(const ModularInvariant& inv);
std::string blocks_string(const FusionSystem& sys, const ModularBlocks& b);

// sizes Z_mn of the matrix blocks of the quantum symmetry algebra, sorted
std::vector<int64_t> ocneanu_block_structure(const ModularInvariant& inv);

// max |ZS - SZ| and |ZT - TZ|
double commutator_S(const FusionSystem& sys, const ModularInvariant& inv);
double commutator_T(const FusionSystem& sys, const ModularInvariant& inv);

// eigenvalues a graph with invariant Z must have: one per exponent (with multiplicity)
std::vector<std::complex<double>> exponent_spectrum(const FusionSystem& sys, const ModularInvariant& inv);
bool spectrum_matches(const IMat& G, const std::vector<std::complex<double>>& target, double tol = 1e-6);

// ---- modular splitting ----

struct ToricFamily {
  std::vector<IMat> W;  // W[x] = W_x0, W[0] = Z
  int alternatives = 1; // distinct factorisations seen within the budget
  uint64_t nodes = 0;

  size_t r_O() const { return W.size(); }
};

// (W_0x)_{lm} = (W_x0)_{conj l, conj m}
IMat toric_partner(const FusionSystem& sys, const IMat& Wx0);

struct SplitCheck {
  bool ok = true;
  std::string detail;
};
SplitCheck verify_splitting(const FusionSystem& sys, const ModularInvariant& inv, const ToricFamily& fam);

class SplitBudgetExhausted : public std::runtime_error {
 public:
  SplitBudgetExhausted(const std::string& what, IMat residual, int found)
      : std::runtime_error(what), residual(std::move(residual)), columns_found(found) {}
  IMat residual;
  int columns_found;
};

class SplitInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SplitOptions {
  uint64_t budget = 10'000'000;
  int max_alternatives = 4;
};
ToricFamily solve_splitting(const FusionSystem& sys, const ModularInvariant& inv, const SplitOptions& opt = {});

nlohmann::json toric_to_json(const FusionSystem& sys, const ModularInvariant& inv, const ToricFamily& fam);
ToricFamily toric_from_json(const nlohmann::json& j);

}  // namespace fk
