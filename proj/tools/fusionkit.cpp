#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "fusionkit/dims.hpp"
#include "fusionkit/kernels.hpp"
#include "fusionkit/qdims.hpp"
#include "fusionkit/render.hpp"

using namespace fk;

namespace {

struct Report {
  int pass = 0, fail = 0;
  std::string first;
  bool quiet = false;

  void item(bool ok, const std::string& what, const std::string& detail, const std::string& cite) {
    (ok ? pass : fail)++;
    std::string line = std::string(ok ? "PASS " : "FAIL ") + what + ": " + detail + (ok ? " ✓" : " ✗") +
                       "  [" + cite + "]";
    if (!ok && first.empty()) first = line;
    if (!quiet || !ok) std::cout << line << "\n";
  }
};

std::vector<Kind> kinds_for(const std::string& algebra) {
  if (algebra.empty() || algebra == "all") return {Kind::sl2, Kind::sl3};
  return {parse_kind(algebra)};
}

std::string s(const mpz_class& z) { return z.get_str(); }

struct Caches {
  std::map<std::pair<int, int>, FusionSystem> sys;
  const FusionSystem& get(Kind k, int level) {
    auto key = std::make_pair(int(k), level);
    auto it = sys.find(key);
    if (it == sys.end()) it = sys.emplace(key, build_fusion(k, level)).first;
    return it->second;
  }
};

std::string oracle_series(const GraphSpec& g) { return g.series == "E" ? g.name : g.series; }

std::string cite(const nlohmann::json& t) { return "Table " + t["table"].get<std::string>().substr(5); }

const nlohmann::json* paper_row(const nlohmann::json& t, const std::string& name) {
  for (auto& r : t["rows"])
    if (r.value("graph", "") == name) return &r;
  return nullptr;
}

std::vector<GraphSpec> select(Kind kind, int level, const std::string& graph, const std::string& dir) {
  CatalogResult c = catalog(kind, level, dir);
  std::vector<GraphSpec> out;
  for (auto& g : c.graphs)
    if (graph.empty() || g.name == graph) out.push_back(g);
  for (auto& [n, why] : c.unavailable)
    if (graph.empty() || graph == n) std::cout << "SKIP " << n << ": graph data unavailable (" << why << ")\n";
  if (!graph.empty() && out.empty()) {
    try {
      out.push_back(find_graph(kind, graph, dir));
    } catch (const std::out_of_range&) {
    }
  }
  return out;
}

void suite_formulas(Kind kind, int level, const std::string& graph, const std::string& dir, Caches& C, Report& R) {
  nlohmann::json t1 = load_paper_table("table1", dir), t3 = load_paper_table("table3", dir);
  nlohmann::json t4 = load_paper_table("table4", dir), t5 = load_paper_table("table5", dir);
  for (auto& g : select(kind, level, graph, dir)) {
    const FusionSystem& sys = C.get(g.kind, g.level);
    AnnularFamily fam = annular(sys, g);
    DimReport d = dim_report(fam);
    std::string n = kind_name(kind) + " " + g.name;
    ClosedPrediction cp = closed_formula_oracle(kind, oracle_series(g), g.level);
    if (cp.available) {
      if (cp.d_H) R.item(*cp.d_H == d.d_H, n, "d_H " + s(d.d_H) + " == closed form " + s(*cp.d_H), "closed formula");
      if (cp.d_B) R.item(*cp.d_B == d.d_B, n, "d_B " + s(d.d_B) + " == closed form " + s(*cp.d_B), "closed formula");
      if (cp.d_n) R.item(*cp.d_n == d.d_n, n, "d_n sequence == closed form", "closed formula");
    }
    if (kind == Kind::sl2) {
      mpz_class rule = sl2_dH_rule(g.kappa, g.rank());
      R.item(rule == d.d_H, n, "d_H " + s(d.d_H) + " == kappa(kappa+1)r/6 = " + s(rule), "d_H rule");
    }
    const nlohmann::json& tab = kind == Kind::sl2 ? t1 : (g.series == "A" || g.series == "Ac" || g.series == "D" || g.series == "Dc") ? t4 : t5;
    if (auto* pr = paper_row(tab, g.name)) {
      mpz_class ph((*pr)["d_H"].get<long>()), pb((*pr)["d_B"].get<long>());
      R.item(ph == d.d_H, n, "d_H " + s(d.d_H) + " == " + s(ph), cite(tab));
      R.item(pb == d.d_B, n, "d_B " + s(d.d_B) + " == " + s(pb), cite(tab));
    }
    R.item(weyl_relation_check(fam), n, "A X = Lambda", "Weyl relation");
    R.item(module_property(sys, fam, g.rank() * sys.rank() < 4000), n, "F_m F_n = sum_p N_mn^p F_p", "module property");
    R.item(rigidity_check(g, fam.F), n, "F_conj(n) = F_n^t", "rigidity");

    ModularInvariant inv;
    try {
      inv = invariant_for(sys, g, dir);
    } catch (const GraphUnavailable& e) {
      std::cout << "SKIP " << n << ": " << e.what() << "\n";
      continue;
    }
    R.item(inv.r_E() == g.rank(), n, "Tr Z = " + std::to_string(inv.r_E()) + " == r_E " + std::to_string(g.rank()),
           "modular invariant");
    const nlohmann::json& rt = kind == Kind::sl2 ? t3 : tab;
    if (auto* pr = paper_row(rt, g.name)) {
      int64_t po = (*pr)["r_O"].get<int64_t>();
      R.item(po == inv.r_O(), n, "Tr Z Z^t = " + std::to_string(inv.r_O()) + " == r_O " + std::to_string(po),
             cite(rt));
    }
    double cs = commutator_S(sys, inv), ct = commutator_T(sys, inv);
    std::ostringstream os;
    os << "|[Z,S]| = " << cs << ", |[Z,T]| = " << ct;
    R.item(cs < 1e-8 && ct < 1e-8, n, os.str(), "modular invariance");

    OrderReport orep = order_report(fam, sys, inv);
    OrderChecks oc = check_orders(fam, sys, orep);
    R.item(oc.product, n, "|A/E| |E| = |A|", "orders");
    R.item(oc.eigen, n, "G mu = mu_1 mu", "quantum dimensions");
    if (g.self_fusion && orep.order_J) {
      R.item(oc.self_fusion, n, "|A|/|E| = |E|/|J|", "orders");
      R.item(oc.J_sum, n, "|A| = sum_J |Gamma_c|^2", "orders");
    } else if (g.self_fusion) {
      std::cout << "SKIP " << n << ": J undetermined" << (orep.warning.empty() ? "" : " (" + orep.warning + ")") << "\n";
    }
  }
  if (kind == Kind::sl3) {
    for (int k = 1; k <= std::max(level, 12); ++k) {
      if (!graph.empty()) break;
      BlockIdentityResult b = sl3_block_identities(C.get(Kind::sl3, k));
      R.item(b.ok(), "sl3 A_" + std::to_string(k), "d_(p,0) closed form and d_(p,q) recurrence", "block dimensions");
    }
  }
}

void suite_trig(Kind kind, int level, const std::string& graph, const std::string& dir, double tol, Caches& C,
                Report& R) {
  InvariantCatalog ic = invariant_catalog(kind, level, dir);
  for (auto& inv : ic.invariants) {
    if (!graph.empty() && inv.graph != graph) continue;
    TrigResult t = trig_identity_check(C.get(kind, inv.k), inv, tol);
    std::ostringstream os;
    os.precision(12);
    os << "sum = " << t.sum << ", expected " << t.expected << (t.exact ? ", exact form holds" : ", exact form FAILS");
    R.item(t.ok(tol), kind_name(kind) + " " + inv.graph, os.str(), "trigonometric identity");
  }
  for (auto& [n, why] : ic.unavailable)
    if (graph.empty() || graph == n) std::cout << "SKIP " << n << ": " << why << "\n";
}

void suite_discriminant(Kind kind, int level, Caches& C, Report& R) {
  int K0 = kind == Kind::sl2 ? 2 : 3;
  for (int k = 1; k <= level; ++k) {
    const FusionSystem& sys = C.get(kind, k);
    DiscriminantReport d = discriminant_suite(sys);
    int K = k + K0;
    std::string n = kind_name(kind) + " A_" + std::to_string(kind == Kind::sl2 ? k + 1 : k);
    std::string cf = kind == Kind::sl2
                         ? "2^" + std::to_string(K - 1) + "·" + std::to_string(K) + "^" + std::to_string(K - 3)
                         : "3^" + std::to_string((K - 2) * (K - 1) / 2) + "·" + std::to_string(K) + "^" +
                               std::to_string((K - 4) * (K - 2));
    R.item(d.integral, n, "D integral", "discriminant");
    if (!d.integral) continue;
    R.item(d.D == d.closed_form, n, "D = " + s(d.D) + " == " + cf, "discriminant");
    if (d.charpoly_disc)
      R.item(*d.charpoly_disc == d.D, n, "disc(charpoly) = " + s(*d.charpoly_disc) + " == " + cf, "discriminant");
    double rel = std::abs(d.prod_mu_sq.to_double() - d.prod_mu_sq_closed) / std::max(1.0, d.prod_mu_sq_closed);
    std::ostringstream os;
    os << "prod mu^2 = " << d.prod_mu_sq.to_double() << " vs sine product " << d.prod_mu_sq_closed;
    R.item(rel < 1e-9, n, os.str(), "product formula");
  }
}

void suite_rigidity(Kind kind, int level, Caches& C, Report& R) {
  for (int k = 1; k <= level; ++k) {
    const FusionSystem& sys = C.get(kind, k);
    int r = sys.rank();
    bool assoc = true, rig = true, unit = sys.N[0] == IMat::identity(r);
    for (int a = 0; a < r && assoc; ++a)
      for (int b = 0; b < r && assoc; ++b) {
        IMat lhs = matmul(sys.N[a], sys.N[b]), rhs(r, r);
        for (int c = 0; c < r; ++c)
          if (sys.N[a](b, c)) rhs += sys.N[c].scaled(sys.N[a](b, c));
        assoc = lhs == rhs;
      }
    for (int a = 0; a < r; ++a) rig = rig && sys.N[sys.conj[a]] == sys.N[a].transpose() && sys.N[a](sys.conj[a], 0) == 1;
    std::string n = kind_name(kind) + " k=" + std::to_string(k);
    R.item(unit, n, "N_0 = 1", "fusion ring");
    R.item(assoc, n, "N_a N_b = sum_c N_ab^c N_c", "fusion ring");
    R.item(rig, n, "N_conj(a) = N_a^t", "fusion ring");
  }
}

int default_split_level(Kind k) { return k == Kind::sl2 ? 28 : 7; }

void suite_splitting(Kind kind, int level, const std::string& graph, const std::string& dir, uint64_t budget,
                     Caches& C, Report& R) {
  for (auto& g : select(kind, level, graph, dir)) {
    const FusionSystem& sys = C.get(g.kind, g.level);
    std::string n = kind_name(kind) + " " + g.name;
    ModularInvariant inv;
    try {
      inv = invariant_for(sys, g, dir);
    } catch (const GraphUnavailable& e) {
      std::cout << "SKIP " << n << ": " << e.what() << "\n";
      continue;
    }
    SplitOptions o;
    o.budget = budget;
    try {
      ToricFamily fam = solve_splitting(sys, inv, o);
      SplitCheck c = verify_splitting(sys, inv, fam);
      R.item(c.ok && int64_t(fam.r_O()) == inv.r_O(), n,
             std::to_string(fam.r_O()) + " toric matrices, r_O = " + std::to_string(inv.r_O()) +
                 (c.ok ? "" : ", " + c.detail),
             "modular splitting");
    } catch (const SplitBudgetExhausted& e) {
      R.item(false, n, std::string("budget exhausted: ") + e.what(), "modular splitting");
    } catch (const SplitInfeasible& e) {
      R.item(false, n, std::string("no solution: ") + e.what(), "modular splitting");
    }
  }
}

std::string block_multiset(const std::vector<int64_t>& sizes) {
  std::map<int64_t, int> cnt;
  for (auto x : sizes) cnt[x]++;
  std::string out = "{";
  bool first = true;
  for (auto& [sz, c] : cnt) {
    out += (first ? "" : ", ") + std::to_string(sz) + "×" + std::to_string(c);
    first = false;
  }
  return out + "}";
}

GraphSpec lookup(const std::string& algebra, const std::string& name, const std::string& dir) {
  if (!algebra.empty()) return find_graph(parse_kind(algebra), name, dir);
  try {
    return find_graph(Kind::sl2, name, dir);
  } catch (const std::out_of_range&) {
    return find_graph(Kind::sl3, name, dir);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusionkit: exact data for sl2 and sl3 module graphs"};
  app.require_subcommand(1);
  std::string dir = data_dir();
  app.add_option("--data", dir, "data directory (default: FUSIONKIT_DATA or the bundled data)");

  std::string table_id, graph, algebra, format = "md";
  bool strict = false, group = false;
  auto* tab = app.add_subcommand("table", "reproduce one of the tables");
  tab->add_option("table", table_id, "table1 .. table5")->required();
  tab->add_option("--graph", graph, "single row");
  tab->add_option("--algebra", algebra, "sl2 or sl3 (implied by the table)");
  tab->add_option("--format", format, "md, csv, json or text")->check(CLI::IsMember({"md", "csv", "json", "text"}));
  tab->add_flag("--strict", strict, "nonzero exit when a row is unavailable or differs from the reference values");
  tab->add_flag("--group", group, "group digits in thousands");

  std::string suite;
  int level = 0;
  double tol = 1e-9;
  uint64_t budget = 10'000'000;
  bool quiet = false;
  auto* chk = app.add_subcommand("check", "run a check suite");
  chk->add_option("suite", suite, "formulas, trig, discriminant, rigidity, splitting or all")
      ->required()
      ->check(CLI::IsMember({"formulas", "trig", "discriminant", "rigidity", "splitting", "all"}));
  chk->add_option("--level", level, "maximal level");
  chk->add_option("--algebra", algebra, "sl2, sl3 or all");
  chk->add_option("--graph", graph, "restrict to one graph");
  chk->add_option("--tol", tol, "numeric tolerance");
  chk->add_option("--budget", budget, "splitting solver budget");
  chk->add_flag("--strict", strict, "fail on skipped items too");
  chk->add_flag("-q,--quiet", quiet, "print failures only");

  std::string out;
  auto* spl = app.add_subcommand("split", "solve the modular splitting equation");
  spl->add_option("graph", graph)->required();
  spl->add_option("--algebra", algebra, "sl2 or sl3");
  spl->add_option("--budget", budget, "search nodes");
  spl->add_option("--out", out, "write the toric family as JSON ('-' for stdout)");

  bool qd = false, ind = false, json = false;
  auto* gr = app.add_subcommand("graph", "inspect graphs");
  auto* show = gr->add_subcommand("show", "print a graph");
  gr->require_subcommand(1);
  show->add_option("name", graph)->required();
  show->add_option("--algebra", algebra, "sl2 or sl3");
  show->add_flag("--qdims", qd, "quantum dimensions of the vertices");
  show->add_flag("--induction", ind, "induced objects Gamma_a");
  show->add_flag("--json", json, "graph file format");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tab) {
      TableOptions o;
      o.graph = graph;
      o.dir = dir;
      o.group = group;
      if (!algebra.empty()) {
        Kind want = table_id == "table4" || table_id == "table5" ? Kind::sl3 : Kind::sl2;
        if (parse_kind(algebra) != want) throw std::invalid_argument(table_id + " is a " + kind_name(want) + " table");
      }
      Table t = build_table(table_id, o);
      std::cout << render_table(t, format);
      if (t.unavailable_rows) std::cerr << t.unavailable_rows << " row(s) unavailable: graph data unavailable\n";
      if (t.paper_mismatches) std::cerr << t.paper_mismatches << " row(s) differ from the reference values\n";
      return strict && (t.unavailable_rows || t.paper_mismatches) ? 1 : 0;
    }

    if (*chk) {
      Caches C;
      Report R;
      R.quiet = quiet;
      bool all = suite == "all";
      for (Kind kind : kinds_for(algebra)) {
        if (all || suite == "formulas") suite_formulas(kind, level ? level : kind == Kind::sl2 ? 28 : 9, graph, dir, C, R);
        if (all || suite == "trig") suite_trig(kind, level ? level : kind == Kind::sl2 ? 28 : 9, graph, dir, tol, C, R);
        if ((all || suite == "discriminant") && graph.empty())
          suite_discriminant(kind, level ? level : kind == Kind::sl2 ? 12 : 8, C, R);
        if ((all || suite == "rigidity") && graph.empty()) suite_rigidity(kind, level ? level : 10, C, R);
        if (all || suite == "splitting")
          suite_splitting(kind, level ? level : default_split_level(kind), graph, dir, budget, C, R);
      }
      std::cout << R.pass << " passed, " << R.fail << " failed\n";
      if (R.fail) {
        std::cout << "first counterexample: " << R.first << "\n";
        return 1;
      }
      if (R.pass == 0) {
        std::cout << "nothing was checked\n";
        return strict ? 1 : 0;
      }
      return 0;
    }

    if (*spl) {
      GraphSpec g = lookup(algebra, graph, dir);
      FusionSystem sys = build_fusion(g.kind, g.level);
      ModularInvariant inv = invariant_for(sys, g, dir);
      SplitOptions o;
      o.budget = budget;
      std::ostream& log = out == "-" ? std::cerr : std::cout;
      ToricFamily fam;
      try {
        fam = solve_splitting(sys, inv, o);
      } catch (const SplitBudgetExhausted& e) {
        log << g.name << ": solver budget exhausted after " << budget << " nodes\n"
            << "  " << e.columns_found << " of " << inv.r_O() << " toric matrices found\n"
            << "  residual entry sum " << e.residual.sum() << ", trace " << e.residual.trace() << "\n";
        return 2;
      }
      SplitCheck c = verify_splitting(sys, inv, fam);
      log << g.name << " (" << kind_name(g.kind) << ", k=" << g.level << "): r_O = " << fam.r_O() << " toric matrices\n"
          << "  blocks " << block_multiset(ocneanu_block_structure(inv)) << "\n"
          << "  alternatives seen: " << fam.alternatives << ", nodes " << fam.nodes << "\n"
          << "  verify_splitting: " << (c.ok ? "ok ✓" : "FAILED: " + c.detail) << "\n";
      if (!out.empty()) {
        std::string js = toric_to_json(sys, inv, fam).dump(1) + "\n";
        if (out == "-") {
          std::cout << js;
        } else {
          std::ofstream f(out);
          if (!f) throw std::runtime_error("cannot write " + out);
          f << js;
          log << "  written to " << out << "\n";
        }
      }
      return c.ok ? 0 : 1;
    }

    if (*show) {
      GraphSpec g = lookup(algebra, graph, dir);
      if (json) {
        std::cout << graph_to_json(g).dump(1) << "\n";
        return 0;
      }
      FusionSystem sys = build_fusion(g.kind, g.level);
      std::cout << g.name << "  " << kind_name(g.kind) << "  k=" << g.level << "  kappa=" << g.kappa
                << "  r_E=" << g.rank() << (g.self_fusion ? "  self-fusion" : "") << "\n";
      if (!g.provenance.empty()) std::cout << "source: " << g.provenance << "\n";
      std::cout << "vertices:";
      for (auto& v : g.vertices) std::cout << " " << v;
      std::cout << "\nadjacency:\n" << to_string(g.adjacency);
      AnnularFamily fam = annular(sys, g);
      std::cout << "F = Gamma_0 = " << multiset_string(sys, frobenius_object(fam)) << "\n";
      if (qd) {
        auto mu = vertex_qdims(fam, sys);
        for (size_t a = 0; a < mu.size(); ++a) std::cout << "mu(" << g.vertices[a] << ") = " << mu[a].pretty() << "\n";
      }
      if (ind)
        for (int a = 0; a < g.rank(); ++a)
          std::cout << "Gamma_" << g.vertices[a] << " = " << multiset_string(sys, induction(fam, a)) << "\n";
      return 0;
    }
  } catch (const GraphUnavailable& e) {
    std::cerr << "graph data unavailable: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
