#include "fusionkit/modact.hpp"

#include "fusionkit/kernels.hpp"

namespace fk {

AnnularFamily annular(const FusionSystem& sys, const GraphSpec& g) {
  if (g.kind != sys.kind || g.level != sys.k)
    throw std::invalid_argument("graph " + g.name + " does not live at " + kind_name(sys.kind) + " level " +
                                std::to_string(sys.k));
  AnnularFamily fam;
  fam.graph = g;
  try {
    fam.F = recursion(sys.kind, sys.k, g.adjacency, true);
  } catch (const NotAModule& e) {
    throw NotAModule(g.name + ": " + e.what());
  }
  return fam;
}

EssentialMatrix essential(const AnnularFamily& fam, int a) {
  int rA = int(fam.F.size()), rE = fam.rank();
  if (a < 0 || a >= rE) throw std::out_of_range("vertex out of range");
  EssentialMatrix e;
  e.base = a;
  e.eps = IMat(rA, rE);
  for (int n = 0; n < rA; ++n)
    for (int b = 0; b < rE; ++b) e.eps(n, b) = fam.F[n](a, b);
  return e;
}

Multiset induction(const AnnularFamily& fam, int a) {
  Multiset m;
  for (int n = 0; n < int(fam.F.size()); ++n)
    if (fam.F[n](0, a)) m.emplace_back(n, fam.F[n](0, a));
  return m;
}

Multiset frobenius_object(const AnnularFamily& fam) { return induction(fam, 0); }

CycReal gamma_dim(const AnnularFamily& fam, int a, const FusionSystem& sys) {
  CycReal s(sys.kappa);
  for (auto& [n, mult] : induction(fam, a)) s += CycReal(sys.kappa, long(mult)) * quantum_dim(sys, n);
  return s;
}

bool module_property(const FusionSystem& sys, const AnnularFamily& fam, bool exhaustive) {
  int r = sys.rank(), e = fam.rank();
  std::vector<int> ns;
  if (exhaustive) {
    for (int n = 0; n < r; ++n) ns.push_back(n);
  } else {
    ns.push_back(1);
    if (sys.kind == Kind::sl3) ns.push_back(2);
  }
  for (int m = 0; m < r; ++m)
    for (int n : ns) {
      IMat lhs = matmul(fam.F[m], fam.F[n]);
      for (int p = 0; p < r; ++p) {
        int64_t c = sys.N[m](n, p);
        if (!c) continue;
        const IMat& Fp = fam.F[p];
        for (size_t i = 0; i < size_t(e) * e; ++i) lhs.a[i] -= c * Fp.a[i];
      }
      if (!lhs.is_zero()) return false;
    }
  return true;
}

std::string multiset_string(const FusionSystem& sys, const Multiset& m) {
  std::string s;
  for (auto& [n, c] : m) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + "*";
    s += sys.label(n);
  }
  return s;
}

}  // namespace fk
