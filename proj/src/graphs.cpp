#include "fusionkit/graphs.hpp"

#include <Eigen/Eigenvalues>
#include <deque>
#include <filesystem>
#include <fstream>
#include <regex>

namespace fk {

nlohmann::json graph_to_json(const GraphSpec& g) {
  nlohmann::json j;
  j["name"] = g.name;
  j["kind"] = kind_name(g.kind);
  j["level"] = g.level;
  j["self_fusion"] = g.self_fusion;
  j["vertices"] = g.vertices;
  j["adjacency"] = to_json(g.adjacency);
  if (!g.series.empty()) j["series"] = g.series;
  if (!g.provenance.empty()) j["provenance"] = g.provenance;
  return j;
}

GraphSpec graph_from_json(const nlohmann::json& j) {
  GraphSpec g;
  g.name = j.at("name").get<std::string>();
  g.kind = parse_kind(j.at("kind").get<std::string>());
  g.level = j.at("level").get<int>();
  g.kappa = altitude(g.kind, g.level);
  g.self_fusion = j.at("self_fusion").get<bool>();
  g.vertices = j.at("vertices").get<std::vector<std::string>>();
  g.adjacency = imat_from_json(j.at("adjacency"));
  g.series = j.value("series", std::string());
  g.provenance = j.value("provenance", std::string());
  if (g.adjacency.rows != g.adjacency.cols || g.adjacency.rows != int(g.vertices.size()))
    throw std::invalid_argument("graph '" + g.name + "': adjacency and vertex list disagree");
  if (g.adjacency.has_negative()) throw std::invalid_argument("graph '" + g.name + "': negative adjacency");
  return g;
}

GraphSpec load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphUnavailable("graph data unavailable: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw GraphUnavailable("graph data unavailable: " + path + " is not valid JSON (" + e.what() + ")");
  }
  return graph_from_json(j);
}

void save_graph_file(const GraphSpec& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << graph_to_json(g).dump(1) << "\n";
}

std::vector<int> bfs_order(const IMat& G, int unit) {
  int n = G.rows;
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  std::deque<int> dq{unit};
  seen[unit] = 1;
  while (order.size() < size_t(n)) {
    if (dq.empty()) {
      for (int i = 0; i < n; ++i)
        if (!seen[i]) {
          dq.push_back(i);
          seen[i] = 1;
          break;
        }
    }
    int v = dq.front();
    dq.pop_front();
    order.push_back(v);
    for (int w = 0; w < n; ++w)
      if (G(v, w) && !seen[w]) {
        seen[w] = 1;
        dq.push_back(w);
      }
  }
  return order;
}

GraphSpec relabel(const GraphSpec& g, const std::vector<int>& order) {
  GraphSpec r = g;
  r.adjacency = permute(g.adjacency, order);
  for (size_t i = 0; i < order.size(); ++i) r.vertices[i] = g.vertices[order[i]];
  return r;
}

namespace {

GraphSpec make_sl2(const std::string& name, const std::string& series, int level, IMat G, int unit, bool sf) {
  GraphSpec g;
  g.name = name;
  g.series = series;
  g.kind = Kind::sl2;
  g.level = level;
  g.kappa = level + 2;
  g.self_fusion = sf;
  g.adjacency = std::move(G);
  for (int i = 0; i < g.adjacency.rows; ++i) g.vertices.push_back(std::to_string(i));
  g = relabel(g, bfs_order(g.adjacency, unit));
  for (int i = 0; i < g.adjacency.rows; ++i) g.vertices[i] = std::to_string(i);
  g.provenance = "generated";
  return g;
}

void link(IMat& G, int a, int b) {
  G(a, b) = 1;
  G(b, a) = 1;
}

std::string sub(const std::string& s, int n) { return s + "_" + std::to_string(n); }

}  // namespace

GraphSpec sl2_A(int r) {
  if (r < 2) throw std::domain_error("A_r needs r >= 2");
  IMat G(r, r);
  for (int i = 0; i + 1 < r; ++i) link(G, i, i + 1);
  return make_sl2(sub("A", r), "A", r - 1, G, 0, true);
}

GraphSpec sl2_D(int r) {
  if (r < 4) throw std::domain_error("D_r needs r >= 4");
  IMat G(r, r);
  for (int i = 0; i + 1 <= r - 3; ++i) link(G, i, i + 1);
  link(G, r - 3, r - 2);
  link(G, r - 3, r - 1);
  return make_sl2(sub("D", r), r % 2 == 0 ? "D_even" : "D_odd", 2 * r - 4, G, 0, r % 2 == 0);
}

GraphSpec sl2_E(int n) {
  int longarm, level;
  bool sf;
  switch (n) {
    case 6: longarm = 2, level = 10, sf = true; break;
    case 7: longarm = 3, level = 16, sf = false; break;
    case 8: longarm = 4, level = 28, sf = true; break;
    default: throw std::domain_error("E_n exists for n = 6, 7, 8");
  }
  // vertex 0 is the branch point; arms of lengths longarm, 2, 1
  IMat G(n, n);
  int next = 1, prev = 0, unit = 0;
  for (int i = 0; i < longarm; ++i, ++next) {
    link(G, prev, next);
    prev = next;
    unit = next;
  }
  prev = 0;
  for (int i = 0; i < 2; ++i, ++next) {
    link(G, prev, next);
    prev = next;
  }
  link(G, 0, next);
  return make_sl2(sub("E", n), "E", level, G, unit, sf);
}

GraphSpec sl3_A(int k) {
  FusionSystem s = build_fusion(Kind::sl3, k);
  GraphSpec g;
  g.name = sub("A", k);
  g.series = "A";
  g.kind = Kind::sl3;
  g.level = k;
  g.kappa = k + 3;
  g.self_fusion = true;
  g.adjacency = s.generator();
  for (int i = 0; i < s.rank(); ++i) g.vertices.push_back(s.label(i));
  g.provenance = "generated";
  return g;
}

GraphSpec sl3_D(int k) {
  FusionSystem s = build_fusion(Kind::sl3, k);
  const IMat& N1 = s.generator();
  auto rot = [&](const Weight& w) { return Weight{k - w.p - w.q, w.p}; };
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_of(s.rank(), -1);
  for (int i = 0; i < s.rank(); ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<int> o{i};
    Weight w = rot(s.irreps[i]);
    while (s.idx(w) != i) {
      o.push_back(s.idx(w));
      w = rot(w);
    }
    for (int x : o) orbit_of[x] = int(orbits.size());
    orbits.push_back(o);
  }
  struct V {
    int orbit, copy;
  };
  std::vector<V> verts;
  std::vector<std::string> names;
  for (int o = 0; o < int(orbits.size()); ++o) {
    std::string rep = s.label(orbits[o][0]);
    if (orbits[o].size() == 1) {
      for (int c = 0; c < 3; ++c) {
        verts.push_back({o, c});
        names.push_back(rep + "_" + std::to_string(c));
      }
    } else {
      verts.push_back({o, -1});
      names.push_back("[" + rep + "]");
    }
  }
  int n = int(verts.size());
  IMat G(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int a = orbits[verts[u].orbit][0];
      bool ufix = verts[u].copy >= 0, vfix = verts[v].copy >= 0;
      int64_t w = 0;
      if (ufix && vfix) {
        w = 0;
      } else if (vfix) {
        w = N1(a, orbits[verts[v].orbit][0]);
      } else {
        for (int b : orbits[verts[v].orbit]) w += N1(a, b);
        if (ufix) {
          if (w % 3) throw std::logic_error("orbifold: fixed point weight not divisible by 3");
          w /= 3;
        }
      }
      G(u, v) = w;
    }
  GraphSpec g;
  g.name = sub("D", k);
  g.series = "D";
  g.kind = Kind::sl3;
  g.level = k;
  g.kappa = k + 3;
  g.self_fusion = k % 3 == 0;
  g.adjacency = G;
  g.vertices = names;
  g.provenance = "generated: Z3 orbifold of A_k";
  return relabel(g, bfs_order(G, 0));
}

GraphSpec sl3_Ac(int k) {
  if (k < 1) throw std::domain_error("A^c_k needs k >= 1");
  int m = (k + 2) / 2;
  int kap = k + 3;
  IMat G(m, m);
  for (int i = 0; i + 1 < m; ++i) link(G, i, i + 1);
  for (int i = 0; i < m; ++i) G(i, i) = 1;
  if (kap % 2 == 1) G(m - 1, m - 1) = 0;
  GraphSpec g;
  g.name = "A^c_" + std::to_string(k);
  g.series = "Ac";
  g.kind = Kind::sl3;
  g.level = k;
  g.kappa = kap;
  g.self_fusion = false;
  g.adjacency = G;
  for (int i = 0; i < m; ++i) g.vertices.push_back(std::to_string(i));
  g.provenance = "generated: path with loops";
  return g;
}

GraphSpec sl3_Dc(int k) {
  GraphSpec a = sl3_Ac(k);
  int m = a.rank();
  IMat G(3 * m, 3 * m);
  for (int i = 0; i < 3; ++i)
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) G(i * m + x, ((i + 1) % 3) * m + y) = a.adjacency(x, y);
  GraphSpec g;
  g.name = "D^c_" + std::to_string(k);
  g.series = "Dc";
  g.kind = Kind::sl3;
  g.level = k;
  g.kappa = k + 3;
  g.self_fusion = false;
  g.adjacency = G;
  for (int i = 0; i < 3; ++i)
    for (int x = 0; x < m; ++x) g.vertices.push_back(std::to_string(x) + "_" + std::to_string(i));
  g.provenance = "generated: Z3 cycle times A^c_k";
  return relabel(g, bfs_order(G, 0));
}

const std::vector<ExceptionalEntry>& sl3_exceptionals() {
  static const std::vector<ExceptionalEntry> list = {
      {"E_5", 5, "sl3_E5.json"},       {"E_5/3", 5, "sl3_E5_3.json"},   {"E_9", 9, "sl3_E9.json"},
      {"E_9/3", 9, "sl3_E9_3.json"},   {"D_9^t", 9, "sl3_D9t.json"},    {"D_9^tc", 9, "sl3_D9tc.json"},
      {"E_21", 21, "sl3_E21.json"},
  };
  return list;
}

std::string graph_file_path(const std::string& file, const std::string& dir) {
  return (std::filesystem::path(dir) / "graphs" / file).string();
}

GraphSpec load_exceptional(const ExceptionalEntry& e, const std::string& dir) {
  std::string path = graph_file_path(e.file, dir);
  if (!std::filesystem::exists(path)) throw GraphUnavailable("graph data unavailable: " + e.name + " (missing " + path + ")");
  GraphSpec g = load_graph_file(path);
  if (g.name != e.name || g.kind != Kind::sl3 || g.level != e.level)
    throw GraphUnavailable("graph data unavailable: " + path + " does not describe " + e.name);
  return g;
}

CatalogResult catalog(Kind kind, int max_level, const std::string& dir) {
  if (max_level < 1) throw std::domain_error("catalog: max_level must be at least 1");
  CatalogResult out;
  if (kind == Kind::sl2) {
    for (int k = 1; k <= max_level; ++k) {
      out.graphs.push_back(sl2_A(k + 1));
      if (k >= 4 && k % 2 == 0) out.graphs.push_back(sl2_D(k / 2 + 2));
      if (k == 10) out.graphs.push_back(sl2_E(6));
      if (k == 16) out.graphs.push_back(sl2_E(7));
      if (k == 28) out.graphs.push_back(sl2_E(8));
    }
    return out;
  }
  for (int k = 1; k <= max_level; ++k) {
    out.graphs.push_back(sl3_A(k));
    out.graphs.push_back(sl3_Ac(k));
    out.graphs.push_back(sl3_D(k));
    out.graphs.push_back(sl3_Dc(k));
    for (auto& e : sl3_exceptionals()) {
      if (e.level != k) continue;
      try {
        out.graphs.push_back(load_exceptional(e, dir));
      } catch (const GraphUnavailable& ex) {
        out.unavailable.emplace_back(e.name, ex.what());
      }
    }
  }
  return out;
}

GraphSpec find_graph(Kind kind, const std::string& name, const std::string& dir) {
  std::smatch m;
  static const std::regex re(R"(^(A|D|E|A\^c|D\^c)_(\d+)$)");
  if (kind == Kind::sl3)
    for (auto& e : sl3_exceptionals())
      if (e.name == name) return load_exceptional(e, dir);
  if (!std::regex_match(name, m, re)) throw std::out_of_range("unknown graph '" + name + "' for " + kind_name(kind));
  std::string fam = m[1];
  int n = std::stoi(m[2]);
  if (kind == Kind::sl2) {
    if (fam == "A" && n >= 2) return sl2_A(n);
    if (fam == "D" && n >= 4) return sl2_D(n);
    if (fam == "E" && n >= 6 && n <= 8) return sl2_E(n);
  } else if (n >= 1) {
    if (fam == "A") return sl3_A(n);
    if (fam == "D") return sl3_D(n);
    if (fam == "A^c") return sl3_Ac(n);
    if (fam == "D^c") return sl3_Dc(n);
  }
  throw std::out_of_range("unknown graph '" + name + "' for " + kind_name(kind));
}

bool rigidity_check(const GraphSpec& g, const std::vector<IMat>& F) {
  std::vector<Weight> ws = weights(g.kind, g.level);
  std::map<Weight, int> at;
  for (int i = 0; i < int(ws.size()); ++i) at[ws[i]] = i;
  if (F.size() != ws.size()) return false;
  for (int i = 0; i < int(ws.size()); ++i) {
    int c = g.kind == Kind::sl2 ? i : at.at({ws[i].q, ws[i].p});
    if (F[c] != F[i].transpose()) return false;
  }
  return true;
}

std::vector<std::complex<double>> spectrum(const IMat& G) {
  Eigen::MatrixXd M(G.rows, G.cols);
  for (int i = 0; i < G.rows; ++i)
    for (int j = 0; j < G.cols; ++j) M(i, j) = double(G(i, j));
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
  std::vector<std::complex<double>> ev;
  for (int i = 0; i < G.rows; ++i) ev.push_back(es.eigenvalues()(i));
  return ev;
}

double perron_frobenius(const IMat& G) {
  double best = 0;
  for (auto z : spectrum(G)) best = std::max(best, std::abs(z));
  return best;
}

}  // namespace fk
