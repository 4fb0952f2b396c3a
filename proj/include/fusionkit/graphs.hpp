#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusionkit/fusion.hpp"
#include "fusionkit/intmat.hpp"

namespace fk {

struct GraphSpec {
  std::string name;
  std::string series;
  Kind kind = Kind::sl2;
  int level = 0;
  int kappa = 0;
  std::vector<std::string> vertices;
  IMat adjacency;
  bool self_fusion = false;
  std::string provenance;

  int rank() const { return adjacency.rows; }
};

class GraphUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json graph_to_json(const GraphSpec& g);
GraphSpec graph_from_json(const nlohmann::json& j);
GraphSpec load_graph_file(const std::string& path);
void save_graph_file(const GraphSpec& g, const std::string& path);

// relabelling: unit first, then breadth-first along the generator
std::vector<int> bfs_order(const IMat& G, int unit = 0);
GraphSpec relabel(const GraphSpec& g, const std::vector<int>& order);

GraphSpec sl2_A(int r);
GraphSpec sl2_D(int r);
GraphSpec sl2_E(int n);
GraphSpec sl3_A(int k);
GraphSpec sl3_D(int k);
GraphSpec sl3_Ac(int k);
GraphSpec sl3_Dc(int k);

struct ExceptionalEntry {
  std::string name;
  int level;
  std::string file;
};
const std::vector<ExceptionalEntry>& sl3_exceptionals();

// data directory: FUSIONKIT_DATA or the build-time default
std::string data_dir();
std::string graph_file_path(const std::string& file, const std::string& dir = data_dir());
GraphSpec load_exceptional(const ExceptionalEntry& e, const std::string& dir = data_dir());

struct CatalogResult {
  std::vector<GraphSpec> graphs;
  std::vector<std::pair<std::string, std::string>> unavailable;  // name, reason
};

CatalogResult catalog(Kind kind, int max_level, const std::string& dir = data_dir());
// by series name, e.g. "E_6", "D_9^t", "A^c_4"; throws GraphUnavailable or std::out_of_range
GraphSpec find_graph(Kind kind, const std::string& name, const std::string& dir = data_dir());

// (F_conj(n))_{ab} == (F_n)_{ba} for every irrep n
bool rigidity_check(const GraphSpec& g, const std::vector<IMat>& F);

std::vector<std::complex<double>> spectrum(const IMat& G);
double perron_frobenius(const IMat& G);

}  // namespace fk
