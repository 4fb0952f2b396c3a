#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "fusionkit/graphs.hpp"
#include "fusionkit/modact.hpp"
#include "fusionkit/modular.hpp"

using namespace fk;

namespace {

const GraphSpec* by_name(const std::vector<GraphSpec>& gs, const std::string& n) {
  for (auto& g : gs)
    if (g.name == n) return &g;
  return nullptr;
}

std::vector<double> sorted_real(const std::vector<std::complex<double>>& v) {
  std::vector<double> out;
  for (auto z : v) out.push_back(z.real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("sl2 catalog") {
  auto c = catalog(Kind::sl2, 28);
  auto* d6 = by_name(c.graphs, "D_6");
  REQUIRE(d6);
  CHECK(d6->rank() == 6);
  CHECK(d6->level == 8);
  int n = 0;
  for (auto& g : c.graphs) {
    ++n;
    CHECK(g.adjacency.is_symmetric());
    for (auto x : g.adjacency.a) CHECK((x == 0 || x == 1));
    CHECK(std::abs(perron_frobenius(g.adjacency) - 2 * std::cos(M_PI / g.kappa)) < 1e-9);
  }
  CHECK(n == 28 + 13 + 3);
  CHECK(c.unavailable.empty());
  CHECK_THROWS_AS(catalog(Kind::sl2, 0), std::domain_error);
}

TEST_CASE("sl2 spectra are the exponents") {
  for (auto& g : catalog(Kind::sl2, 28).graphs) {
    FusionSystem s = build_fusion(Kind::sl2, g.level);
    ModularInvariant z = invariant_for(s, g);
    std::vector<double> want;
    for (int m = 0; m < s.rank(); ++m)
      for (int t = 0; t < z.Z(m, m); ++t) want.push_back(2 * std::cos((m + 1) * M_PI / g.kappa));
    std::sort(want.begin(), want.end());
    auto got = sorted_real(spectrum(g.adjacency));
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-9);
  }
  // E_6 exponents 1, 4, 5, 7, 8, 11
  auto e6 = sorted_real(spectrum(sl2_E(6).adjacency));
  std::vector<double> ex;
  for (int m : {1, 4, 5, 7, 8, 11}) ex.push_back(2 * std::cos(m * M_PI / 12));
  std::sort(ex.begin(), ex.end());
  for (int i = 0; i < 6; ++i) CHECK(std::abs(e6[i] - ex[i]) < 1e-9);
}

TEST_CASE("sl3 catalog") {
  auto c = catalog(Kind::sl3, 21);
  std::map<std::string, int> r_E;
  for (auto t : {"table4", "table5"}) {
    std::ifstream in(data_dir() + "/tables/" + t + ".json");
    auto j = nlohmann::json::parse(in);
    for (auto& row : j["rows"]) r_E[row["graph"]] = row["r_E"];
  }
  int matched = 0;
  for (auto& g : c.graphs) {
    FusionSystem s = build_fusion(Kind::sl3, g.level);
    CHECK(std::abs(perron_frobenius(g.adjacency) - quantum_dim(s, s.idx(1, 0)).to_double()) < 1e-9);
    CHECK(rigidity_check(g, annular(s, g).F));
    CHECK(g.vertices.size() == size_t(g.rank()));
    CHECK(g.rank() == invariant_for(s, g).r_E());
    if (r_E.count(g.name)) {
      CHECK_MESSAGE(g.rank() == r_E[g.name], g.name);
      ++matched;
    }
  }
  CHECK(matched >= 20);
  for (auto n : {"E_5", "E_5/3", "E_9", "D_9^t", "E_21"}) CHECK(find_graph(Kind::sl3, n).rank() == r_E[n]);
  std::set<std::string> missing;
  for (auto& [n, why] : c.unavailable) {
    missing.insert(n);
    CHECK(why.find("graph data unavailable") != std::string::npos);
  }
  CHECK(missing == std::set<std::string>{"E_9/3", "D_9^tc"});
  CHECK_THROWS_AS(find_graph(Kind::sl3, "E_9/3"), GraphUnavailable);
  CHECK_THROWS_AS(find_graph(Kind::sl3, "X_4"), std::out_of_range);
}

TEST_CASE("graph files round-trip") {
  for (auto& e : sl3_exceptionals()) {
    std::string p = graph_file_path(e.file);
    if (!std::filesystem::exists(p)) continue;
    GraphSpec g = load_graph_file(p);
    CHECK(graph_to_json(graph_from_json(graph_to_json(g))).dump() == graph_to_json(g).dump());
    std::string tmp = (std::filesystem::temp_directory_path() / "fk_graph_rt.json").string();
    save_graph_file(g, tmp);
    std::ifstream a(p), b(tmp);
    std::string sa((std::istreambuf_iterator<char>(a)), {}), sb((std::istreambuf_iterator<char>(b)), {});
    CHECK(sa == sb);
  }
}

TEST_CASE("vertex ordering") {
  GraphSpec g = sl2_E(6);
  auto order = bfs_order(g.adjacency, 0);
  CHECK(order[0] == 0);
  CHECK(std::set<int>(order.begin(), order.end()).size() == 6);
  // the unit of E_6 is a leaf at the end of a long arm
  int deg = 0;
  for (int j = 0; j < 6; ++j) deg += g.adjacency(0, j);
  CHECK(deg == 1);
  GraphSpec h = relabel(g, {5, 4, 3, 2, 1, 0});
  CHECK(h.adjacency == permute(g.adjacency, {5, 4, 3, 2, 1, 0}));
}
