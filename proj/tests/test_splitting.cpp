#include <doctest.h>

#include <algorithm>
#include <set>

#include "fusionkit/gram.hpp"
#include "fusionkit/kernels.hpp"
#include "fusionkit/modular.hpp"

using namespace fk;

namespace {

struct Case {
  FusionSystem sys;
  ModularInvariant inv;
};

Case make(Kind kind, const std::string& name) {
  GraphSpec g = find_graph(kind, name);
  FusionSystem s = build_fusion(kind, g.level);
  return {s, invariant_for(s, g)};
}

IMat mm(const IMat& A, const IMat& B) {
  IMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < B.cols; ++j)
      for (int t = 0; t < A.cols; ++t) C(i, j) += A(i, t) * B(t, j);
  return C;
}

// the splitting equation written out for sl2, where every irrep is self-conjugate
bool sl2_equation(const Case& c, const ToricFamily& f) {
  int r = c.sys.rank();
  for (int l = 0; l < r; ++l)
    for (int m = 0; m < r; ++m) {
      IMat lhs(r, r);
      for (auto& W : f.W) lhs += W.scaled(W(l, m));
      if (lhs != mm(mm(c.sys.N[l], c.inv.Z), c.sys.N[m].transpose())) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("A series: the toric matrices are the fusion matrices") {
  for (int k = 1; k <= 12; ++k) {
    Case c = make(Kind::sl2, "A_" + std::to_string(k + 1));
    ToricFamily f = solve_splitting(c.sys, c.inv);
    CHECK(verify_splitting(c.sys, c.inv, f).ok);
    auto W = f.W, N = c.sys.N;
    std::sort(W.begin(), W.end());
    std::sort(N.begin(), N.end());
    CHECK(W == N);
    CHECK(f.W[0] == IMat::identity(k + 1));
  }
  Case c = make(Kind::sl3, "A_3");
  ToricFamily f = solve_splitting(c.sys, c.inv);
  auto W = f.W, N = c.sys.N;
  std::sort(W.begin(), W.end());
  std::sort(N.begin(), N.end());
  CHECK(W == N);
}

TEST_CASE("E_6, D_6 and D_4") {
  Case e6 = make(Kind::sl2, "E_6");
  ToricFamily f = solve_splitting(e6.sys, e6.inv);
  CHECK(f.r_O() == 12);
  CHECK(f.W[0] == e6.inv.Z);
  CHECK(verify_splitting(e6.sys, e6.inv, f).ok);
  CHECK(sl2_equation(e6, f));

  Case d6 = make(Kind::sl2, "D_6");
  ToricFamily g = solve_splitting(d6.sys, d6.inv);
  CHECK(g.r_O() == 12);
  CHECK(verify_splitting(d6.sys, d6.inv, g).ok);
  CHECK(sl2_equation(d6, g));
  CHECK(ocneanu_block_structure(d6.inv) == std::vector<int64_t>{1, 1, 1, 1, 1, 1, 1, 1, 2});

  Case d4 = make(Kind::sl2, "D_4");
  ToricFamily h = solve_splitting(d4.sys, d4.inv);
  CHECK(h.r_O() == 8);
  CHECK(sl2_equation(d4, h));
  std::set<IMat> distinct(h.W.begin(), h.W.end());
  CHECK(distinct.size() == 5);  // D_even repeats toric matrices on the 2x2 block
}

TEST_CASE("every sl2 invariant up to level 28 splits") {
  for (auto& inv : invariant_catalog(Kind::sl2, 28).invariants) {
    FusionSystem s = build_fusion(Kind::sl2, inv.k);
    ToricFamily f = solve_splitting(s, inv);
    CHECK_MESSAGE(int64_t(f.r_O()) == inv.r_O(), inv.graph);
    CHECK_MESSAGE(verify_splitting(s, inv, f).ok, inv.graph);
    CHECK_MESSAGE(sl2_equation({s, inv}, f), inv.graph);
  }
  for (auto& inv : invariant_catalog(Kind::sl3, 5).invariants) {
    FusionSystem s = build_fusion(Kind::sl3, inv.k);
    ToricFamily f = solve_splitting(s, inv);
    CHECK_MESSAGE(int64_t(f.r_O()) == inv.r_O(), inv.graph);
    CHECK_MESSAGE(verify_splitting(s, inv, f).ok, inv.graph);
  }
}

TEST_CASE("verification rejects tampering") {
  Case e6 = make(Kind::sl2, "E_6");
  ToricFamily f = solve_splitting(e6.sys, e6.inv);
  for (size_t x : {size_t(0), size_t(5), f.W.size() - 1}) {
    ToricFamily bad = f;
    bad.W[x](1, 2) += 1;
    CHECK(!verify_splitting(e6.sys, e6.inv, bad).ok);
  }
  ToricFamily shorter = f;
  shorter.W.pop_back();
  CHECK(!verify_splitting(e6.sys, e6.inv, shorter).ok);
  ToricFamily neg = f;
  neg.W[3](0, 0) = -1;
  CHECK(!verify_splitting(e6.sys, e6.inv, neg).ok);
}

TEST_CASE("toric JSON and determinism") {
  Case e7 = make(Kind::sl2, "E_7");
  ToricFamily a = solve_splitting(e7.sys, e7.inv), b = solve_splitting(e7.sys, e7.inv);
  auto ja = toric_to_json(e7.sys, e7.inv, a);
  CHECK(ja.dump() == toric_to_json(e7.sys, e7.inv, b).dump());
  ToricFamily back = toric_from_json(nlohmann::json::parse(ja.dump()));
  CHECK(back.W == a.W);
  CHECK(toric_to_json(e7.sys, e7.inv, back).dump() == ja.dump());
  CHECK(ja["r_O"] == e7.inv.r_O());
}

TEST_CASE("budget exhaustion carries a residual") {
  Case e9 = make(Kind::sl3, "E_9");
  SplitOptions o;
  o.budget = 2000;
  try {
    solve_splitting(e9.sys, e9.inv, o);
    FAIL("expected SplitBudgetExhausted");
  } catch (const SplitBudgetExhausted& e) {
    CHECK(e.residual.rows > 0);
    CHECK(!e.residual.has_negative());
    CHECK(e.columns_found >= 0);
  }
}

TEST_CASE("Gram factorisation on small matrices") {
  auto mat = [](const char* s) { return imat_from_json(nlohmann::json::parse(s)); };
  for (const char* s : {"[[2,1],[1,1]]", "[[3]]", "[[2,2],[2,2]]", "[[1,0,1],[0,1,1],[1,1,3]]"}) {
    IMat M = mat(s);
    GramResult r = gram_factor(M);
    REQUIRE_MESSAGE(r.solutions.size() == 1, s);
    IMat V = columns_to_matrix(r.solutions[0], M.rows);
    CHECK(!V.has_negative());
    CHECK(matmul(V, V.transpose()) == M);
  }
  GramResult none = gram_factor(mat("[[1,1],[1,0]]"));
  CHECK(none.solutions.empty());
  CHECK(!none.exhausted);
  GramResult two = gram_factor(mat("[[1,0],[0,4]]"));
  REQUIRE(two.solutions.size() == 1);
  GramOptions many;
  many.max_solutions = 10;
  // 4 = 2^2 or 1+1+1+1 on the second row
  CHECK(gram_factor(mat("[[4]]"), many).solutions.size() == 2);
}
