#pragma once

#include <utility>
#include <vector>

#include "fusionkit/exactnum.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/graphs.hpp"

namespace fk {

struct AnnularFamily {
  GraphSpec graph;
  std::vector<IMat> F;  // indexed like FusionSystem::irreps

  int rank() const { return graph.rank(); }
};

struct EssentialMatrix {
  int base = 0;
  IMat eps;  // r_A x r_E, eps(n, b) = (F_n)(base, b)
};

// irrep index with multiplicity
using Multiset = std::vector<std::pair<int, int64_t>>;

AnnularFamily annular(const FusionSystem& sys, const GraphSpec& g);
EssentialMatrix essential(const AnnularFamily& fam, int a);
// Gamma_a: irreps n with multiplicity (F_n)(0, a)
Multiset induction(const AnnularFamily& fam, int a);
Multiset frobenius_object(const AnnularFamily& fam);
CycReal gamma_dim(const AnnularFamily& fam, int a, const FusionSystem& sys);

// F_m F_n == sum_p (N_m)(n, p) F_p for all m, n; with exhaustive = false only the
// generators n are tried, which already forces the identity for every n
bool module_property(const FusionSystem& sys, const AnnularFamily& fam, bool exhaustive = true);

std::string multiset_string(const FusionSystem& sys, const Multiset& m);

}  // namespace fk
