#pragma once

#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fusionkit/exactnum.hpp"
#include "fusionkit/intmat.hpp"

namespace fk {

enum class Kind { sl2, sl3 };

std::string kind_name(Kind k);
Kind parse_kind(const std::string& s);

// sl2 irreps use p = n, q = 0
struct Weight {
  int p = 0, q = 0;
  auto operator<=>(const Weight&) const = default;
};

std::vector<Weight> weights(Kind kind, int k);
int altitude(Kind kind, int k);
std::string weight_label(Kind kind, const Weight& w);

class NotAModule : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs the truncated recursion seeded by G (and G^t for sl3). Returns one matrix per weight,
// in weights() order. Negative entries raise NotAModule when strict.
std::vector<IMat> recursion(Kind kind, int k, const IMat& G, bool strict = true);

// sl2 only: N_0 .. N_nmax with the untruncated recursion (period 2*kappa)
std::vector<IMat> sl2_extended(const IMat& G, int nmax);

struct FusionSystem {
  Kind kind = Kind::sl2;
  int k = 0;
  int kappa = 0;
  std::vector<Weight> irreps;
  std::map<Weight, int> index;
  std::vector<IMat> N;
  std::vector<int> conj;

  int rank() const { return int(irreps.size()); }
  int idx(const Weight& w) const;
  int idx(int p, int q = 0) const { return idx(Weight{p, q}); }
  std::string label(int i) const { return weight_label(kind, irreps[i]); }
  const IMat& generator() const { return N[1]; }
};

FusionSystem build_fusion(Kind kind, int k);

Eigen::MatrixXcd modular_S(const FusionSystem& sys);
Eigen::VectorXcd modular_T(const FusionSystem& sys);
double conformal_weight(const FusionSystem& sys, int i);
mpq_class central_charge(Kind kind, int k);

CycReal quantum_dim(const FusionSystem& sys, int i);
std::vector<CycReal> quantum_dims(const FusionSystem& sys);
CycReal order_A(const FusionSystem& sys);
// closed trigonometric expression for |A|
double order_A_closed(Kind kind, int k);

}  // namespace fk
