#include "fusionkit/derive.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "fusionkit/gram.hpp"
#include "fusionkit/kernels.hpp"

namespace fk {

namespace {

using QRow = std::vector<mpq_class>;

// in-place reduced row echelon form; returns pivot column per row
std::vector<int> rref(std::vector<QRow>& m, int ncols) {
  std::vector<int> piv;
  size_t row = 0;
  for (int c = 0; c < ncols && row < m.size(); ++c) {
    size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    mpq_class inv = 1 / m[row][c];
    for (auto& x : m[row])
      if (x != 0) x *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (size_t j = c; j < m[i].size(); ++j)
        if (m[row][j] != 0) m[i][j] -= f * m[row][j];
    }
    piv.push_back(c);
    ++row;
  }
  m.resize(row);
  return piv;
}


bool intertwines(const IMat& eps, const IMat& A, const IMat& G) {
  return matmul(eps, G) == matmul(A, eps) && matmul(eps, G.transpose()) == matmul(A.transpose(), eps);
}

}  // namespace

std::vector<IMat> intertwiners(const IMat& eps, const IMat& A, int bound, uint64_t budget, int max_out) {
  int r = eps.cols;
  IMat Et = eps.transpose();
  IMat P = matmul(Et, eps), Q1 = matmul(Et, matmul(A, eps)), Q2 = matmul(Et, matmul(A.transpose(), eps));
  int nu = r * r;
  std::vector<QRow> sys;
  for (int i = 0; i < r; ++i)
    for (int b = 0; b < r; ++b) {
      QRow e1(nu + 1, 0), e2(nu + 1, 0);
      for (int a = 0; a < r; ++a) {
        if (!P(i, a)) continue;
        e1[a * r + b] += long(P(i, a));
        e2[b * r + a] += long(P(i, a));
      }
      e1[nu] = long(Q1(i, b));
      e2[nu] = long(Q2(i, b));
      sys.push_back(std::move(e1));
      sys.push_back(std::move(e2));
    }
  std::vector<int> piv = rref(sys, nu);
  for (auto& row : sys) {
    bool allzero = true;
    for (int j = 0; j < nu; ++j)
      if (row[j] != 0) allzero = false;
    if (allzero && row[nu] != 0) return {};
  }
  std::vector<int> is_free(nu, -1), frees;
  std::vector<bool> pivotal(nu, false);
  for (int c : piv) pivotal[c] = true;
  for (int j = 0; j < nu; ++j)
    if (!pivotal[j]) {
      is_free[j] = int(frees.size());
      frees.push_back(j);
    }
  // pivot row i is decided once its last free variable is assigned
  std::vector<std::vector<int>> ready(frees.size() + 1);
  for (size_t i = 0; i < sys.size(); ++i) {
    int last = -1;
    for (int j = 0; j < nu; ++j)
      if (is_free[j] >= 0 && sys[i][j] != 0) last = std::max(last, is_free[j]);
    ready[last + 1].push_back(int(i));
  }
  std::vector<IMat> out;
  std::vector<int64_t> fv(frees.size(), 0);
  uint64_t nodes = 0;
  IMat G(r, r);
  auto settle = [&](int depth) {
    for (int i : ready[depth]) {
      mpq_class v = sys[i][nu];
      for (size_t f = 0; f < frees.size() && int(f) < depth; ++f)
        if (sys[i][frees[f]] != 0) v -= sys[i][frees[f]] * long(fv[f]);
      if (v.get_den() != 1 || v < 0 || v > bound) return false;
      G.a[piv[i]] = v.get_num().get_si();
    }
    return true;
  };
  std::function<void(int)> rec = [&](int d) {
    if (int(out.size()) >= max_out || ++nodes > budget) return;
    if (!settle(d)) return;
    if (d == int(frees.size())) {
      if (intertwines(eps, A, G)) out.push_back(G);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      fv[d] = v;
      G.a[frees[d]] = v;
      rec(d + 1);
    }
    fv[d] = 0;
    G.a[frees[d]] = 0;
  };
  rec(0);
  return out;
}

DerivedGraph derive_from_algebra(const FusionSystem& sys, const Multiset& F, int r_E, const ModularInvariant& inv,
                                 const std::string& name, bool self_fusion, const DeriveOptions& opt) {
  int r = sys.rank();
  IMat M(r, r);
  for (auto& [f, mult] : F) M += sys.N[f].scaled(mult);
  std::set<std::vector<Column>> seen;
  std::vector<IMat> epss;
  GramOptions go;
  go.budget = opt.gram_budget;
  go.max_solutions = opt.max_factorizations;
  go.accept = [&](const std::vector<Column>& cols) {
    if (int(cols.size()) != r_E) return false;
    std::vector<Column> key = cols;
    std::sort(key.rbegin(), key.rend());
    if (!seen.insert(key).second) return false;
    epss.push_back(columns_to_matrix(key, r));
    return true;
  };
  GramResult gr = gram_factor(M, go);
  if (epss.empty())
    throw std::runtime_error(name + ": no Gram factorisation with " + std::to_string(r_E) + " columns" +
                             (gr.exhausted ? " within budget" : ""));
  auto target = exponent_spectrum(sys, inv);
  DerivedGraph out;
  out.factorizations = int(epss.size());
  for (auto& eps : epss) {
    for (auto& G : intertwiners(eps, sys.generator(), opt.entry_bound, opt.enum_budget)) {
      if (!spectrum_matches(G, target)) continue;
      try {
        recursion(sys.kind, sys.k, G, true);
      } catch (const NotAModule&) {
        continue;
      }
      ++out.candidates;
      if (out.graph.rank()) continue;
      int unit = -1;
      for (int a = 0; a < r_E; ++a)
        if (eps(0, a)) unit = a;
      GraphSpec g;
      g.name = name;
      g.kind = sys.kind;
      g.level = sys.k;
      g.kappa = sys.kappa;
      g.self_fusion = self_fusion;
      g.adjacency = G;
      for (int a = 0; a < r_E; ++a) g.vertices.push_back(std::to_string(a));
      auto order = bfs_order(G, unit);
      g = relabel(g, order);
      for (int a = 0; a < r_E; ++a) g.vertices[a] = std::to_string(a);
      g.provenance = "derived: Gram factorisation of the algebra object " + multiset_string(sys, F);
      out.graph = g;
      out.eps = IMat(r, r_E);
      for (int n = 0; n < r; ++n)
        for (int a = 0; a < r_E; ++a) out.eps(n, a) = eps(n, order[a]);
    }
  }
  if (!out.graph.rank()) throw std::runtime_error(name + ": no adjacency matrix passes the spectrum and recursion filters");
  return out;
}

GraphSpec simple_current_quotient(const FusionSystem& sys, const GraphSpec& g, int current, const std::string& name) {
  AnnularFamily fam = annular(sys, g);
  const IMat& P = fam.F[current];
  int e = g.rank();
  std::vector<int> img(e, -1);
  for (int a = 0; a < e; ++a) {
    int cnt = 0;
    for (int b = 0; b < e; ++b)
      if (P(a, b)) {
        if (P(a, b) != 1) cnt = 99;
        img[a] = b;
        ++cnt;
      }
    if (cnt != 1) throw std::invalid_argument(sys.label(current) + " does not act by a permutation on " + g.name);
  }
  std::vector<int> orbit(e, -1);
  int no = 0;
  for (int a = 0; a < e; ++a) {
    if (orbit[a] >= 0) continue;
    int len = 0;
    for (int b = a; orbit[b] < 0; b = img[b], ++len) orbit[b] = no;
    if (len == 1) throw std::invalid_argument(sys.label(current) + " has a fixed vertex on " + g.name);
    ++no;
  }
  IMat Q(no, no);
  std::vector<int> rep(no, -1);
  for (int a = 0; a < e; ++a)
    if (rep[orbit[a]] < 0) rep[orbit[a]] = a;
  for (int o = 0; o < no; ++o)
    for (int b = 0; b < e; ++b) Q(o, orbit[b]) += g.adjacency(rep[o], b);
  GraphSpec q;
  q.name = name;
  q.kind = g.kind;
  q.level = g.level;
  q.kappa = g.kappa;
  q.self_fusion = false;
  q.adjacency = Q;
  for (int o = 0; o < no; ++o) q.vertices.push_back(std::to_string(o));
  q = relabel(q, bfs_order(Q, orbit[0]));
  for (int o = 0; o < no; ++o) q.vertices[o] = std::to_string(o);
  q.provenance = "derived: quotient of " + g.name + " by the simple current " + sys.label(current);
  return q;
}

}  // namespace fk
