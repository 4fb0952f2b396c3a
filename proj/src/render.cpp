#include "fusionkit/render.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "fusionkit/dims.hpp"
#include "fusionkit/modular.hpp"
#include "fusionkit/qdims.hpp"

namespace fk {

std::string factorization(const mpz_class& n0) {
  mpz_class n = abs(n0);
  if (n < 2) return n.get_str();
  std::string s;
  auto emit = [&](const mpz_class& p, int e) { s += (s.empty() ? "" : " ") + p.get_str() + "^" + std::to_string(e); };
  for (mpz_class p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) emit(p, e);
  }
  if (n > 1) emit(n, 1);
  return s;
}

std::string group_digits(const std::string& d) {
  size_t start = (!d.empty() && d[0] == '-') ? 1 : 0;
  if (d.size() - start <= 3 || d.find_first_not_of("-0123456789") != std::string::npos) return d;
  std::string out;
  int c = 0;
  for (size_t i = d.size(); i-- > start;) {
    out.insert(out.begin(), d[i]);
    if (++c % 3 == 0 && i > start) out.insert(out.begin(), ' ');
  }
  return d.substr(0, start) + out;
}

std::string exact_and_decimal(const CycReal& x) { return x.pretty(6); }

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

// display width, counting UTF-8 code points
std::string md_cell(const std::string& s) {
  std::string o;
  for (char ch : s) {
    if (ch == '|') o += '\\';
    o += ch;
  }
  return o;
}

size_t width(const std::string& s) {
  size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

}  // namespace

std::string render_table(const Table& t, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    for (size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_cell(t.header[i]);
    os << "\n";
    for (auto& r : t.rows) {
      for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
      os << "\n";
    }
  } else if (format == "json") {
    nlohmann::ordered_json j;
    j["table"] = t.id;
    j["title"] = t.title;
    j["rows"] = nlohmann::ordered_json::array();
    for (auto& r : t.rows) {
      nlohmann::ordered_json o;
      for (size_t i = 0; i < r.size(); ++i) o[t.header[i]] = r[i];
      j["rows"].push_back(o);
    }
    os << j.dump(1) << "\n";
  } else if (format == "md") {
    os << "**" << t.title << "**\n\n|";
    for (auto& h : t.header) os << " " << md_cell(h) << " |";
    os << "\n|";
    for (size_t i = 0; i < t.header.size(); ++i) os << "---|";
    os << "\n";
    for (auto& r : t.rows) {
      os << "|";
      for (auto& c : r) os << " " << md_cell(c) << " |";
      os << "\n";
    }
  } else if (format == "text") {
    std::vector<size_t> w(t.header.size(), 0);
    for (size_t i = 0; i < t.header.size(); ++i) w[i] = width(t.header[i]);
    for (auto& r : t.rows)
      for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], width(r[i]));
    auto line = [&](const std::vector<std::string>& r) {
      for (size_t i = 0; i < r.size(); ++i) os << (i ? "  " : "") << r[i] << std::string(w[i] - width(r[i]), ' ');
      os << "\n";
    };
    os << t.title << "\n";
    line(t.header);
    for (auto& r : t.rows) line(r);
  } else {
    throw std::invalid_argument("unknown format '" + format + "' (md, csv, json, text)");
  }
  return os.str();
}

nlohmann::json load_paper_table(const std::string& id, const std::string& dir) {
  std::filesystem::path p = std::filesystem::path(dir) / "tables" / (id + ".json");
  std::ifstream in(p);
  if (!in) return nlohmann::json::object();
  nlohmann::json j;
  in >> j;
  return j;
}

namespace {

struct Ctx {
  const TableOptions& opt;
  std::map<std::pair<int, int>, FusionSystem> systems;
  std::vector<DimFixture> fixtures;
  nlohmann::json paper;

  const FusionSystem& sys(Kind kind, int k) {
    auto key = std::make_pair(int(kind), k);
    auto it = systems.find(key);
    if (it == systems.end()) it = systems.emplace(key, build_fusion(kind, k)).first;
    return it->second;
  }
  const nlohmann::json* paper_row(const std::string& g) {
    if (!paper.contains("rows")) return nullptr;
    for (auto& r : paper["rows"])
      if (r.value("graph", "") == g) return &r;
    return nullptr;
  }
  std::string num(const mpz_class& n) { return opt.group ? group_digits(n.get_str()) : n.get_str(); }
};

std::string seq(const std::vector<mpz_class>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

bool close_to(double a, double b) { return std::abs(a - b) <= 1e-3 * std::max(1.0, std::abs(b)) + 5e-3; }

std::vector<GraphSpec> rows_for(const std::string& id, const TableOptions& opt, std::vector<std::string>& missing) {
  std::vector<GraphSpec> out;
  if (id == "table1" || id == "table2" || id == "table3") {
    out = catalog(Kind::sl2, 28, opt.dir).graphs;
  } else if (id == "table4") {
    for (auto& g : catalog(Kind::sl3, 9, opt.dir).graphs)
      if (g.series == "A" || g.series == "Ac" || g.series == "D" || g.series == "Dc") out.push_back(g);
    if (opt.graph == "A_21") out.push_back(sl3_A(21));
  } else if (id == "table5") {
    for (auto& e : sl3_exceptionals()) {
      try {
        out.push_back(load_exceptional(e, opt.dir));
      } catch (const GraphUnavailable&) {
        missing.push_back(e.name);
      }
    }
  } else {
    throw std::invalid_argument("unknown table '" + id + "' (table1 .. table5)");
  }
  if (!opt.graph.empty()) {
    std::vector<GraphSpec> f;
    for (auto& g : out)
      if (g.name == opt.graph) f.push_back(g);
    std::vector<std::string> m;
    for (auto& n : missing)
      if (n == opt.graph) m.push_back(n);
    missing = m;
    if (f.empty() && m.empty()) throw std::out_of_range("graph " + opt.graph + " is not a row of " + id);
    out = f;
  }
  return out;
}

std::string J_cell(const GraphSpec& g, const OrderReport& rep) {
  if (!g.self_fusion) return "-";
  if (!rep.order_J) return "[unknown]";
  return exact_and_decimal(*rep.order_J);
}

}  // namespace

Table build_table(const std::string& id, const TableOptions& opt) {
  Ctx ctx{opt, {}, load_dim_fixtures(opt.dir), load_paper_table(id, opt.dir)};
  std::vector<std::string> missing;
  std::vector<GraphSpec> graphs = rows_for(id, opt, missing);
  Table t;
  t.id = id;
  if (id == "table1") {
    t.title = "Horizontal, vertical and bialgebra dimensions (sl2)";
    t.header = {"graph", "k", "d_n", "d_x", "d_H", "d_H factors", "dV-dH", "d_B", "d_B factors", "ref"};
  } else if (id == "table2") {
    t.title = "Quantum dimensions and orders (sl2)";
    t.header = {"graph", "k", "F", "q-dims", "|E|", "|A/E|", "|J|", "ref"};
  } else if (id == "table3") {
    t.title = "Modular invariants and algebra objects (sl2)";
    t.header = {"graph", "kappa", "r_E, r_A, r_O", "Z", "F", "ref"};
  } else {
    t.title = id == "table4" ? "Dimensions and quantum masses (sl3: A, D and conjugates)"
                             : "Dimensions and quantum masses (sl3 exceptionals)";
    t.header = {"graph", "kappa", "r_E, r_A, r_O", "d_H", "dV-dH", "d_B", "|E|", "|A/E|", "|J|", "ref"};
  }
  for (auto& g : graphs) {
    const FusionSystem& sys = ctx.sys(g.kind, g.level);
    const nlohmann::json* pr = ctx.paper_row(g.name);
    std::vector<std::string> diffs;
    std::vector<std::string> row{g.name};
    AnnularFamily fam = annular(sys, g);
    if (id == "table1") {
      auto fx = find_fixture(ctx.fixtures, Kind::sl2, g.name);
      DimReport d = fx ? dim_report(fam, *fx) : dim_report(fam);
      row.push_back(std::to_string(g.level));
      row.push_back(seq(d.d_n));
      row.push_back(fx ? seq(fx->d_x) + " [fixture]" : "[unknown]");
      row.push_back(ctx.num(d.d_H));
      row.push_back(factorization(d.d_H));
      if (fx)
        row.push_back(mpz_class(*d.d_V - d.d_H).get_str() + " [fixture]");
      else if (pr && !(*pr)["gap"].is_null())
        row.push_back(std::to_string((*pr)["gap"].get<long>()) + " [fixture]");
      else
        row.push_back("[unknown]");
      row.push_back(ctx.num(d.d_B));
      row.push_back(factorization(d.d_B));
      if (pr) {
        if (mpz_class((*pr)["d_H"].get<long>()) != d.d_H) diffs.push_back("d_H " + (*pr)["d_H"].dump());
        if (mpz_class((*pr)["d_B"].get<long>()) != d.d_B) diffs.push_back("d_B " + (*pr)["d_B"].dump());
        std::vector<mpz_class> pn;
        for (auto& x : (*pr)["d_n"]) pn.emplace_back(x.get<long>());
        if (pn != d.d_n) diffs.push_back("d_n");
        if (fx) {
          mpz_class gap = *d.d_V - d.d_H;
          if (gap != mpz_class((*pr)["gap"].get<long>())) diffs.push_back("dV-dH " + (*pr)["gap"].dump());
        }
      }
    } else if (id == "table2" || id == "table4" || id == "table5") {
      ModularInvariant inv = invariant_for(sys, g, opt.dir);
      OrderReport rep = order_report(fam, sys, inv);
      if (id == "table2") {
        row.push_back(std::to_string(g.level));
        row.push_back(multiset_string(sys, frobenius_object(fam)));
        std::string q;
        for (size_t a = 0; a < rep.mu.size(); ++a) {
          std::string r = rep.mu[a].radical_string();
          q += (a ? ", " : "") + (r.empty() ? rep.mu[a].decimal(6) : r);
        }
        row.push_back(q);
      } else {
        auto fx = find_fixture(ctx.fixtures, Kind::sl3, g.name);
        DimReport d = fx ? dim_report(fam, *fx) : dim_report(fam);
        row.push_back(std::to_string(g.kappa));
        row.push_back(std::to_string(g.rank()) + ", " + std::to_string(sys.rank()) + ", " + std::to_string(inv.r_O()));
        row.push_back(ctx.num(d.d_H));
        if (fx)
          row.push_back(mpz_class(*d.d_V - d.d_H).get_str() + " [fixture]");
        else if (pr && !(*pr)["gap"].is_null())
          row.push_back(std::to_string((*pr)["gap"].get<long>()) + " [fixture]");
        else
          row.push_back("[unknown]");
        row.push_back(ctx.num(d.d_B));
        if (pr) {
          if (mpz_class((*pr)["d_H"].get<long>()) != d.d_H) diffs.push_back("d_H " + (*pr)["d_H"].dump());
          if (mpz_class((*pr)["d_B"].get<long>()) != d.d_B) diffs.push_back("d_B " + (*pr)["d_B"].dump());
          if ((*pr)["r_E"].get<int>() != g.rank()) diffs.push_back("r_E " + (*pr)["r_E"].dump());
          if ((*pr)["r_O"].get<int64_t>() != inv.r_O()) diffs.push_back("r_O " + (*pr)["r_O"].dump());
        }
      }
      row.push_back(exact_and_decimal(rep.order_E));
      row.push_back(exact_and_decimal(rep.order_quotient));
      row.push_back(J_cell(g, rep));
      if (pr) {
        auto cmp = [&](const char* key, const CycReal& v, const char* label) {
          if ((*pr).contains(key) && !(*pr)[key].is_null() && !close_to(v.to_double(), (*pr)[key].get<double>()))
            diffs.push_back(std::string(label) + " " + (*pr)[key].dump());
        };
        cmp("E_value", rep.order_E, "|E|");
        cmp("AE_value", rep.order_quotient, "|A/E|");
        if (rep.order_J) cmp("J_value", *rep.order_J, "|J|");
      }
    } else {  // table3
      ModularInvariant inv = invariant_for(sys, g, opt.dir);
      row.push_back(std::to_string(g.kappa));
      row.push_back(std::to_string(g.rank()) + ", " + std::to_string(sys.rank()) + ", " + std::to_string(inv.r_O()));
      row.push_back(presentation_string(sys, inv));
      row.push_back(multiset_string(sys, frobenius_object(fam)));
      if (pr) {
        if ((*pr)["r_E"].get<int64_t>() != inv.r_E() || (*pr)["r_E"].get<int>() != g.rank())
          diffs.push_back("r_E " + (*pr)["r_E"].dump());
        if ((*pr)["r_O"].get<int64_t>() != inv.r_O()) diffs.push_back("r_O " + (*pr)["r_O"].dump());
      }
    }
    if (!pr)
      row.push_back("");
    else if (diffs.empty())
      row.push_back("ok");
    else {
      std::string s = "differs:";
      for (auto& x : diffs) s += " " + x;
      row.push_back(s);
      ++t.paper_mismatches;
    }
    t.rows.push_back(std::move(row));
  }
  for (auto& m : missing) {
    std::vector<std::string> row{m};
    for (size_t i = 1; i < t.header.size(); ++i) row.push_back("[unavailable]");
    t.rows.push_back(std::move(row));
    ++t.unavailable_rows;
  }
  return t;
}

}  // namespace fk
