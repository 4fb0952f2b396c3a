#pragma once

#include <string>
#include <vector>

#include "fusionkit/modact.hpp"
#include "fusionkit/modular.hpp"

namespace fk {

// Rebuild a module graph from its algebra object F = Gamma_0:
//   sum_{f in F} N_f = eps eps^t  (nonneg integer Gram factorisation, r_E columns)
//   eps G = N_1 eps,  eps G^t = N_1^t eps
// candidates must have the exponent spectrum of Z and a nonnegative annular recursion.
struct DeriveOptions {
  uint64_t gram_budget = 5'000'000;
  int max_factorizations = 4;
  int entry_bound = 3;
  uint64_t enum_budget = 20'000'000;
};

struct DerivedGraph {
  GraphSpec graph;
  IMat eps;
  int factorizations = 0;  // distinct eps tried
  int candidates = 0;      // adjacency matrices passing every filter
};

DerivedGraph derive_from_algebra(const FusionSystem& sys, const Multiset& F, int r_E, const ModularInvariant& inv,
                                 const std::string& name, bool self_fusion, const DeriveOptions& opt = {});

// quotient by the permutation F_current (a simple current acting freely on vertices)
GraphSpec simple_current_quotient(const FusionSystem& sys, const GraphSpec& g, int current, const std::string& name);

// all nonneg integer G with eps G = A eps, eps G^t = A^t eps, entries <= bound
std::vector<IMat> intertwiners(const IMat& eps, const IMat& A, int bound, uint64_t budget, int max_out = 64);

}  // namespace fk
