#include "fusionkit/modular.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include "fusionkit/gram.hpp"
#include "fusionkit/kernels.hpp"

namespace fk {

int64_t ModularInvariant::r_O() const {
  int64_t s = 0;
  for (auto x : Z.a) s += x * x;
  return s;
}

int parse_label(const FusionSystem& sys, const std::string& s0) {
  std::string s;
  for (char c : s0)
    if (c != '(' && c != ')' && c != ' ') s += c;
  try {
    if (sys.kind == Kind::sl2) {
      if (s.find(',') != std::string::npos) throw std::invalid_argument(s0);
      return sys.idx(std::stoi(s));
    }
    auto c = s.find(',');
    if (c == std::string::npos) throw std::invalid_argument(s0);
    return sys.idx(std::stoi(s.substr(0, c)), std::stoi(s.substr(c + 1)));
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("label " + s0 + " outside the level-" + std::to_string(sys.k) + " alcove");
  }
}

IMat expand_terms(const FusionSystem& sys, const std::vector<InvariantTerm>& terms, bool conjugated) {
  int r = sys.rank();
  IMat Z(r, r);
  for (auto& t : terms)
    for (int a : t.m)
      for (int b : t.n) Z(a, conjugated ? sys.conj[b] : b) += t.coeff;
  return Z;
}

namespace {

InvariantTerm term(std::vector<int> m, std::vector<int> n, int64_t c = 1) { return {std::move(m), std::move(n), c}; }
InvariantTerm sq(std::vector<int> m, int64_t c = 1) { return {m, m, c}; }

ModularInvariant finish(const FusionSystem& sys, std::string graph, std::vector<InvariantTerm> terms, bool conj,
                        std::string source) {
  ModularInvariant inv;
  inv.graph = std::move(graph);
  inv.kind = sys.kind;
  inv.k = sys.k;
  inv.terms = std::move(terms);
  inv.conjugated = conj;
  inv.Z = expand_terms(sys, inv.terms, conj);
  inv.source = std::move(source);
  return inv;
}

std::vector<InvariantTerm> idx_terms(const FusionSystem& sys, const std::vector<InvariantTerm>& lab) {
  // sl2 helper: labels given as integers n, convert to indices
  std::vector<InvariantTerm> out;
  for (auto t : lab) {
    for (auto& x : t.m) x = sys.idx(x);
    for (auto& x : t.n) x = sys.idx(x);
    out.push_back(t);
  }
  return out;
}

ModularInvariant sl2_invariant(const FusionSystem& sys, const GraphSpec& g) {
  int k = sys.k;
  std::vector<InvariantTerm> t;
  if (g.series == "A") {
    for (int n = 0; n <= k; ++n) t.push_back(sq({n}));
  } else if (g.series == "D_even") {
    for (int i = 1; i <= k / 2 - 1; i += 2) t.push_back(sq({i - 1, k + 1 - i}));
    t.push_back(sq({k / 2}, 2));
  } else if (g.series == "D_odd") {
    for (int i = 1; i <= k + 1; i += 2) t.push_back(sq({i - 1}));
    t.push_back(sq({k / 2}));
    for (int i = 2; i <= k / 2 - 1; i += 2) {
      t.push_back(term({i - 1}, {k + 1 - i}));
      t.push_back(term({k + 1 - i}, {i - 1}));
    }
  } else if (g.name == "E_6") {
    t = {sq({0, 6}), sq({3, 7}), sq({4, 10})};
  } else if (g.name == "E_7") {
    t = {sq({0, 16}), sq({4, 12}), sq({6, 10}), sq({8}), term({2, 14}, {8}), term({8}, {2, 14})};
  } else if (g.name == "E_8") {
    t = {sq({0, 10, 18, 28}), sq({6, 12, 16, 22})};
  } else {
    throw std::out_of_range("no sl2 invariant for " + g.name);
  }
  return finish(sys, g.name, idx_terms(sys, t), false, "generated");
}

// Z3 simple-current rotation of the sl3 alcove
int rotate(const FusionSystem& sys, int i) {
  const Weight& w = sys.irreps[i];
  return sys.idx(sys.k - w.p - w.q, w.p);
}

int triality(const Weight& w) { return ((w.p - w.q) % 3 + 3) % 3; }

std::vector<InvariantTerm> sl3_D_terms(const FusionSystem& sys) {
  int r = sys.rank(), k = sys.k;
  std::vector<InvariantTerm> t;
  if (k % 3 == 0) {
    std::vector<bool> seen(r, false);
    for (int i = 0; i < r; ++i) {
      if (seen[i] || triality(sys.irreps[i])) continue;
      std::vector<int> orb{i};
      for (int j = rotate(sys, i); j != i; j = rotate(sys, j)) orb.push_back(j);
      for (int j : orb) seen[j] = true;
      if (orb.size() == 1)
        t.push_back(sq(orb, 3));
      else
        t.push_back(sq(orb));
    }
  } else {
    for (int i = 0; i < r; ++i) {
      int j = i;
      for (int s = 0; s < (k * triality(sys.irreps[i])) % 3; ++s) j = rotate(sys, j);
      t.push_back(term({i}, {j}));
    }
  }
  return t;
}

ModularInvariant sl3_generated(const FusionSystem& sys, const GraphSpec& g) {
  std::vector<InvariantTerm> t;
  if (g.series == "A" || g.series == "Ac") {
    for (int i = 0; i < sys.rank(); ++i) t.push_back(sq({i}));
  } else if (g.series == "D" || g.series == "Dc") {
    t = sl3_D_terms(sys);
  } else {
    throw std::out_of_range("no generated sl3 invariant for " + g.name);
  }
  bool conj = g.series == "Ac" || g.series == "Dc";
  return finish(sys, g.name, t, conj, "generated");
}

std::vector<std::string> labels_of(const FusionSystem& sys, const std::vector<int>& v) {
  std::vector<std::string> out;
  for (int i : v) out.push_back(sys.kind == Kind::sl2 ? std::to_string(sys.irreps[i].p) : sys.label(i));
  return out;
}

}  // namespace

ModularInvariant invariant_from_json(const FusionSystem& sys, const nlohmann::json& j, const std::string& where) {
  std::string what = where.empty() ? "invariant" : where;
  std::vector<InvariantTerm> terms;
  for (auto& t : j.at("terms")) {
    InvariantTerm x;
    for (auto& s : t.at(0)) x.m.push_back(parse_label(sys, s.get<std::string>()));
    for (auto& s : t.at(1)) x.n.push_back(parse_label(sys, s.get<std::string>()));
    x.coeff = t.size() > 2 ? t.at(2).get<int64_t>() : 1;
    terms.push_back(std::move(x));
  }
  ModularInvariant inv =
      finish(sys, j.at("graph").get<std::string>(), terms, j.value("conjugate", false), j.value("source", what));
  if (inv.Z(0, 0) != 1) throw InvariantIntegrityError(what + ": Z_00 = " + std::to_string(inv.Z(0, 0)) + ", expected 1");
  if (j.contains("r_E") && j["r_E"].get<int64_t>() != inv.r_E())
    throw InvariantIntegrityError(what + ": Tr Z = " + std::to_string(inv.r_E()) + " but the file declares r_E = " +
                                  std::to_string(j["r_E"].get<int64_t>()));
  if (j.contains("r_O") && j["r_O"].get<int64_t>() != inv.r_O())
    throw InvariantIntegrityError(what + ": Tr ZZ^t = " + std::to_string(inv.r_O()) + " but the file declares r_O = " +
                                  std::to_string(j["r_O"].get<int64_t>()));
  return inv;
}

nlohmann::json invariant_to_json(const FusionSystem& sys, const ModularInvariant& inv) {
  nlohmann::json j;
  j["graph"] = inv.graph;
  j["kind"] = kind_name(inv.kind);
  j["level"] = inv.k;
  j["conjugate"] = inv.conjugated;
  j["terms"] = nlohmann::json::array();
  for (auto& t : inv.terms) j["terms"].push_back({labels_of(sys, t.m), labels_of(sys, t.n), t.coeff});
  j["r_E"] = inv.r_E();
  j["r_O"] = inv.r_O();
  return j;
}

std::string invariant_file_path(const std::string& graph_file, const std::string& dir) {
  return (std::filesystem::path(dir) / "invariants" / graph_file).string();
}

ModularInvariant invariant_for(const FusionSystem& sys, const GraphSpec& g, const std::string& dir) {
  if (g.kind != sys.kind || g.level != sys.k) throw std::invalid_argument("invariant_for: level mismatch for " + g.name);
  if (sys.kind == Kind::sl2) return sl2_invariant(sys, g);
  if (g.series == "A" || g.series == "Ac" || g.series == "D" || g.series == "Dc") return sl3_generated(sys, g);
  for (auto& e : sl3_exceptionals()) {
    if (e.name != g.name) continue;
    std::string path = invariant_file_path(e.file, dir);
    std::ifstream in(path);
    if (!in) throw GraphUnavailable("invariant data unavailable: " + e.name + " (missing " + path + ")");
    nlohmann::json j;
    in >> j;
    ModularInvariant inv = invariant_from_json(sys, j, path);
    if (inv.graph != g.name) throw InvariantIntegrityError(path + ": describes " + inv.graph + ", not " + g.name);
    return inv;
  }
  throw std::out_of_range("no invariant known for " + g.name);
}

InvariantCatalog invariant_catalog(Kind kind, int max_level, const std::string& dir) {
  InvariantCatalog out;
  CatalogResult cat = catalog(kind, max_level, dir);
  std::map<int, FusionSystem> systems;
  for (auto& g : cat.graphs) {
    auto it = systems.find(g.level);
    if (it == systems.end()) it = systems.emplace(g.level, build_fusion(kind, g.level)).first;
    try {
      out.invariants.push_back(invariant_for(it->second, g, dir));
    } catch (const GraphUnavailable& e) {
      out.unavailable.emplace_back(g.name, e.what());
    }
  }
  for (auto& u : cat.unavailable) {
    // invariants do not need the graph
    for (auto& e : sl3_exceptionals()) {
      if (e.name != u.first) continue;
      std::string path = invariant_file_path(e.file, dir);
      std::ifstream in(path);
      if (!in) {
        out.unavailable.push_back(u);
        continue;
      }
      auto it = systems.find(e.level);
      if (it == systems.end()) it = systems.emplace(e.level, build_fusion(kind, e.level)).first;
      nlohmann::json j;
      in >> j;
      out.invariants.push_back(invariant_from_json(it->second, j, path));
    }
  }
  return out;
}

std::string presentation_string(const FusionSystem& sys, const ModularInvariant& inv) {
  auto sum = [&](const std::vector<int>& v) {
    std::string s;
    for (int i : v) s += (s.empty() ? "" : "+") + std::string("X") + sys.label(i);
    return s;
  };
  std::string out;
  for (auto& t : inv.terms) {
    if (!out.empty()) out += " + ";
    if (t.coeff != 1) out += std::to_string(t.coeff);
    if (t.m == t.n)
      out += "|" + sum(t.m) + "|^2";
    else
      out += "(" + sum(t.m) + ")(" + sum(t.n) + ")*";
  }
  if (inv.conjugated) out = "[" + out + "].C";
  return out;
}

ModularBlocks modular_blocks(const ModularInvariant& inv) {
  const IMat& Z = inv.Z;
  int r = Z.rows;
  std::vector<int> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<int> ex;
  for (int i = 0; i < r; ++i)
    if (Z(i, i)) ex.push_back(i);
  for (int a : ex)
    for (int b : ex)
      if (Z(a, b) || Z(b, a)) parent[find(a)] = find(b);
  std::map<int, std::vector<int>> comp;
  for (int a : ex) comp[find(a)].push_back(a);
  ModularBlocks out;
  for (auto& [root, v] : comp) {
    if (std::find(v.begin(), v.end(), 0) != v.end()) out.origin = int(out.blocks.size());
    out.multiplicity.push_back(Z(v[0], v[0]));
    out.blocks.push_back(v);
  }
  return out;
}

std::string blocks_string(const FusionSystem& sys, const ModularBlocks& b) {
  std::string s;
  for (size_t i = 0; i < b.blocks.size(); ++i) {
    if (i) s += ", ";
    s += "{";
    for (size_t j = 0; j < b.blocks[i].size(); ++j) s += (j ? "," : "") + sys.label(b.blocks[i][j]);
    s += "}";
    if (b.multiplicity[i] != 1) s += "x" + std::to_string(b.multiplicity[i]);
  }
  return s;
}

std::vector<int64_t> ocneanu_block_structure(const ModularInvariant& inv) {
  std::vector<int64_t> out;
  for (auto x : inv.Z.a)
    if (x) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

double commutator_S(const FusionSystem& sys, const ModularInvariant& inv) {
  Eigen::MatrixXcd S = modular_S(sys);
  int r = sys.rank();
  Eigen::MatrixXcd Z(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) Z(i, j) = double(inv.Z(i, j));
  return (Z * S - S * Z).cwiseAbs().maxCoeff();
}

double commutator_T(const FusionSystem& sys, const ModularInvariant& inv) {
  Eigen::VectorXcd T = modular_T(sys);
  double m = 0;
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = 0; j < sys.rank(); ++j)
      if (inv.Z(i, j)) m = std::max(m, std::abs(double(inv.Z(i, j)) * (T(j) - T(i))));
  return m;
}

std::vector<std::complex<double>> exponent_spectrum(const FusionSystem& sys, const ModularInvariant& inv) {
  std::vector<std::complex<double>> out;
  double K = sys.kappa;
  for (int i = 0; i < sys.rank(); ++i) {
    int64_t mult = inv.Z(i, i);
    if (!mult) continue;
    const Weight& w = sys.irreps[i];
    std::complex<double> g;
    if (sys.kind == Kind::sl2) {
      g = 2 * std::cos(M_PI * (w.p + 1) / K);
    } else {
      double a = w.p + 1, b = w.q + 1;
      for (double x : {(2 * a + b) / 3, (b - a) / 3, -(a + 2 * b) / 3}) g += std::polar(1.0, 2 * M_PI * x / K);
    }
    for (int64_t c = 0; c < mult; ++c) out.push_back(g);
  }
  return out;
}

bool spectrum_matches(const IMat& G, const std::vector<std::complex<double>>& target, double tol) {
  if (int(target.size()) != G.rows) return false;
  auto ev = spectrum(G);
  auto match = [&](bool conj) {
    std::vector<bool> used(ev.size(), false);
    for (auto t : target) {
      if (conj) t = std::conj(t);
      bool hit = false;
      for (size_t i = 0; i < ev.size(); ++i)
        if (!used[i] && std::abs(ev[i] - t) < tol) {
          used[i] = hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  };
  return match(false) || match(true);
}

IMat toric_partner(const FusionSystem& sys, const IMat& W) {
  int r = W.rows;
  IMat P(r, r);
  for (int l = 0; l < r; ++l)
    for (int m = 0; m < r; ++m) P(l, m) = W(sys.conj[l], sys.conj[m]);
  return P;
}

SplitCheck verify_splitting(const FusionSystem& sys, const ModularInvariant& inv, const ToricFamily& fam) {
  SplitCheck c;
  auto fail = [&](std::string d) {
    c.ok = false;
    c.detail = std::move(d);
    return c;
  };
  int r = sys.rank();
  if (fam.W.empty() || fam.W[0] != inv.Z) return fail("W_00 differs from Z");
  if (int64_t(fam.W.size()) != inv.r_O())
    return fail("family has " + std::to_string(fam.W.size()) + " toric matrices, Tr ZZ^t = " + std::to_string(inv.r_O()));
  for (auto& W : fam.W) {
    if (W.rows != r || W.cols != r) return fail("toric matrix of wrong size");
    if (W.has_negative()) return fail("negative toric matrix entry");
  }
  std::vector<IMat> partner;
  for (auto& W : fam.W) partner.push_back(toric_partner(sys, W));
  for (int l = 0; l < r; ++l) {
    IMat NZ = matmul(sys.N[l], inv.Z);
    for (int m = 0; m < r; ++m) {
      IMat lhs = matmul(NZ, sys.N[m].transpose());
      for (size_t x = 0; x < fam.W.size(); ++x) {
        int64_t c0 = partner[x](l, m);
        if (!c0) continue;
        for (size_t i = 0; i < lhs.a.size(); ++i) lhs.a[i] -= c0 * fam.W[x].a[i];
      }
      if (!lhs.is_zero()) return fail("splitting equation fails at (" + sys.label(l) + ", " + sys.label(m) + ")");
    }
  }
  c.detail = std::to_string(fam.W.size()) + " toric matrices";
  return c;
}

ToricFamily solve_splitting(const FusionSystem& sys, const ModularInvariant& inv, const SplitOptions& opt) {
  int r = sys.rank();
  IMat K = splitting_matrix(sys.N, inv.Z, sys.conj);
  int64_t want = inv.r_O();
  std::set<std::vector<std::vector<int64_t>>> seen;
  std::vector<std::vector<IMat>> found;
  GramOptions go;
  go.budget = opt.budget;
  go.max_solutions = opt.max_alternatives;
  go.accept = [&](const std::vector<Column>& cols) {
    if (int64_t(cols.size()) != want) return false;
    std::vector<std::vector<int64_t>> key(cols.begin(), cols.end());
    std::sort(key.rbegin(), key.rend());
    if (key[0] != inv.Z.a) return false;
    if (!seen.insert(key).second) return false;
    std::vector<IMat> Ws;
    for (auto& c : key) {
      IMat W(r, r);
      W.a = c;
      Ws.push_back(std::move(W));
    }
    found.push_back(std::move(Ws));
    return true;
  };
  GramResult res = gram_factor(K, go);
  if (found.empty()) {
    if (res.exhausted)
      throw SplitBudgetExhausted("splitting budget of " + std::to_string(opt.budget) + " nodes exhausted for " + inv.graph,
                                 res.residual, res.residual_columns);
    throw SplitInfeasible("no nonnegative integer splitting with " + std::to_string(want) + " toric matrices for " +
                          inv.graph);
  }
  // deterministic choice among alternatives: lexicographically smallest family
  auto best = std::min_element(found.begin(), found.end(), [](auto& a, auto& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i].a != b[i].a) return a[i].a < b[i].a;
    return false;
  });
  ToricFamily fam;
  fam.W = *best;
  fam.alternatives = int(found.size());
  fam.nodes = res.nodes;
  return fam;
}

nlohmann::json toric_to_json(const FusionSystem& sys, const ModularInvariant& inv, const ToricFamily& fam) {
  nlohmann::json j;
  j["graph"] = inv.graph;
  j["kind"] = kind_name(sys.kind);
  j["level"] = sys.k;
  j["r_O"] = fam.W.size();
  j["family"] = nlohmann::json::array();
  for (size_t x = 0; x < fam.W.size(); ++x) {
    nlohmann::json w;
    w["x"] = x;
    w["W"] = to_json(fam.W[x]);
    j["family"].push_back(w);
  }
  return j;
}

ToricFamily toric_from_json(const nlohmann::json& j) {
  ToricFamily fam;
  for (auto& w : j.at("family")) fam.W.push_back(imat_from_json(w.at("W")));
  return fam;
}

}  // namespace fk
