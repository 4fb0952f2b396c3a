#include <doctest.h>

#include "fusionkit/modact.hpp"
#include "fusionkit/qdims.hpp"

using namespace fk;

namespace {

std::vector<int64_t> d_n(const AnnularFamily& fam) {
  std::vector<int64_t> out;
  for (auto& F : fam.F) out.push_back(F.sum());
  return out;
}

Multiset ms(std::initializer_list<int> irreps) {
  Multiset m;
  for (int i : irreps) m.emplace_back(i, 1);
  return m;
}

CycReal sqrt3(int K) {
  CycReal b = CycReal::beta(K);
  return b * b - CycReal(K, 2L);  // K = 12
}

}  // namespace

TEST_CASE("annular matrices of the A series are the fusion matrices") {
  for (int k = 1; k <= 12; ++k) {
    FusionSystem s = build_fusion(Kind::sl2, k);
    AnnularFamily f = annular(s, sl2_A(k + 1));
    CHECK(f.F == s.N);
  }
  for (int k = 1; k <= 5; ++k) {
    FusionSystem s = build_fusion(Kind::sl3, k);
    CHECK(annular(s, sl3_A(k)).F == s.N);
  }
}

TEST_CASE("d_n of E_6 and D_6") {
  FusionSystem s10 = build_fusion(Kind::sl2, 10);
  auto e6 = d_n(annular(s10, sl2_E(6)));
  CHECK(e6[2] == 14);
  CHECK(std::vector<int64_t>(e6.begin(), e6.begin() + 4) == std::vector<int64_t>{6, 10, 14, 18});
  FusionSystem s8 = build_fusion(Kind::sl2, 8);
  CHECK(d_n(annular(s8, sl2_D(6))) == std::vector<int64_t>{6, 10, 14, 16, 18, 16, 14, 10, 6});
}

TEST_CASE("induction and the Frobenius object") {
  FusionSystem s10 = build_fusion(Kind::sl2, 10), s16 = build_fusion(Kind::sl2, 16), s28 = build_fusion(Kind::sl2, 28);
  AnnularFamily e6 = annular(s10, sl2_E(6));
  CHECK(induction(e6, 0) == ms({0, 6}));
  CHECK(frobenius_object(annular(s16, sl2_E(7))) == ms({0, 8, 16}));
  CHECK(frobenius_object(annular(s28, sl2_E(8))) == ms({0, 10, 18, 28}));
  for (int k = 4; k <= 28; k += 4) {
    FusionSystem s = build_fusion(Kind::sl2, k);
    CHECK(frobenius_object(annular(s, sl2_D(k / 2 + 2))) == ms({0, k}));
  }
  for (int k = 1; k <= 8; ++k) {
    FusionSystem s = build_fusion(Kind::sl2, k);
    CHECK(frobenius_object(annular(s, sl2_A(k + 1))) == ms({0}));
  }
  CHECK(multiset_string(s10, induction(e6, 0)) == "0 + 6");
  // essential matrix: eps(n, b) = (F_n)(0, b), and restriction reads the transpose
  EssentialMatrix ep = essential(e6, 0);
  for (int n = 0; n < s10.rank(); ++n)
    for (int b = 0; b < e6.rank(); ++b) {
      CHECK(ep.eps(n, b) == e6.F[n](0, b));
      CHECK(e6.F[n](b, 0) == ep.eps(n, b));
    }
  EssentialMatrix eA = essential(annular(s10, sl2_A(11)), 0);
  CHECK(eA.eps == IMat::identity(11));
}

TEST_CASE("dimensions of the induced objects on E_6") {
  FusionSystem s = build_fusion(Kind::sl2, 10);
  AnnularFamily e6 = annular(s, sl2_E(6));
  CycReal g0 = gamma_dim(e6, 0, s);
  CHECK(g0 == CycReal(12, 3L) + sqrt3(12));
  CHECK(g0.radical_string() == "3+√3");
  CHECK(gamma_dim(e6, 2, s) / g0 == CycReal(12, 1L) + sqrt3(12));
  auto mu = vertex_qdims(e6, s);
  for (int a = 0; a < e6.rank(); ++a) CHECK(gamma_dim(e6, a, s) == g0 * mu[a]);
  CHECK(mu[1] * mu[1] - mu[0] == mu[2]);
  CHECK(gamma_dim(annular(s, sl2_A(11)), 0, s) == CycReal(12, 1L));
}

TEST_CASE("module property and rigidity over the catalog") {
  for (Kind kind : {Kind::sl2, Kind::sl3}) {
    int top = kind == Kind::sl2 ? 12 : 9;
    for (auto& g : catalog(kind, top).graphs) {
      FusionSystem s = build_fusion(kind, g.level);
      AnnularFamily f = annular(s, g);
      CHECK(f.F[0] == IMat::identity(g.rank()));
      CHECK(f.F[s.idx(1, 0)] == g.adjacency);
      CHECK_MESSAGE(module_property(s, f, true), g.name);
      CHECK(rigidity_check(g, f.F));
      for (auto& F : f.F) CHECK(!F.has_negative());
    }
  }
}
