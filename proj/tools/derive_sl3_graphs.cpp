// Rebuilds the bundled sl3 exceptional graphs from their algebra objects and writes data/graphs/*.json.
#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "fusionkit/derive.hpp"
#include "fusionkit/dims.hpp"

using namespace fk;

namespace {

struct Job {
  std::string name, file;
  int k;
  std::vector<std::string> F;
  int r_E;
  bool self_fusion;
  DeriveOptions opt;
};

ModularInvariant load_inv(const FusionSystem& sys, const std::string& file, const std::string& dir) {
  std::string p = invariant_file_path(file, dir);
  std::ifstream in(p);
  if (!in) throw std::runtime_error("missing " + p);
  nlohmann::json j;
  in >> j;
  return invariant_from_json(sys, j, p);
}

void report(const FusionSystem& sys, const GraphSpec& g) {
  DimReport d = dim_report(annular(sys, g));
  std::cout << "  " << g.name << ": r_E " << g.rank() << ", d_H " << d.d_H << ", d_B " << d.d_B << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"derive sl3 exceptional graphs"};
  std::string dir = data_dir(), only;
  bool dry = false;
  app.add_option("--data", dir, "data directory");
  app.add_option("--only", only, "derive a single graph");
  app.add_flag("--dry-run", dry, "do not write files");
  CLI11_PARSE(app, argc, argv);

  DeriveOptions small;
  DeriveOptions big;
  big.max_factorizations = 1;
  std::vector<Job> jobs = {
      {"E_5", "sl3_E5.json", 5, {"(0,0)", "(2,2)"}, 12, true, small},
      {"E_9", "sl3_E9.json", 9, {"(0,0)", "(9,0)", "(0,9)", "(4,4)", "(4,1)", "(1,4)"}, 12, true, small},
      {"D_9^t", "sl3_D9t.json", 9, {"(0,0)", "(9,0)", "(0,9)", "(3,3)"}, 17, false, small},
      {"E_21",
       "sl3_E21.json",
       21,
       {"(0,0)", "(4,4)", "(6,6)", "(10,10)", "(21,0)", "(0,21)", "(13,4)", "(4,13)", "(10,1)", "(1,10)", "(9,6)", "(6,9)"},
       24,
       true,
       big},
  };
  std::filesystem::create_directories(std::filesystem::path(dir) / "graphs");
  int fails = 0;
  for (auto& j : jobs) {
    if (!only.empty() && only != j.name && !(only == "E_5/3" && j.name == "E_5")) continue;
    auto t0 = std::chrono::steady_clock::now();
    try {
      FusionSystem sys = build_fusion(Kind::sl3, j.k);
      Multiset F;
      for (auto& l : j.F) F.emplace_back(parse_label(sys, l), 1);
      ModularInvariant inv = load_inv(sys, j.file, dir);
      DerivedGraph dg = derive_from_algebra(sys, F, j.r_E, inv, j.name, j.self_fusion, j.opt);
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cout << j.name << ": " << dg.factorizations << " factorisation(s), " << dg.candidates
                << " admissible adjacency matrices, " << s << " s\n";
      report(sys, dg.graph);
      if (!dry) save_graph_file(dg.graph, graph_file_path(j.file, dir));
      if (j.name == "E_5") {
        GraphSpec q = simple_current_quotient(sys, dg.graph, sys.idx(5, 0), "E_5/3");
        report(sys, q);
        if (!dry) save_graph_file(q, graph_file_path("sl3_E5_3.json", dir));
      }
    } catch (const std::exception& e) {
      std::cerr << j.name << ": " << e.what() << "\n";
      ++fails;
    }
  }
  std::cout << "E_9/3 and D_9^tc: no algebra object known, not derived\n";
  return fails ? 1 : 0;
}
