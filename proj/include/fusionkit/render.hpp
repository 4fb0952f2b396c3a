#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "fusionkit/exactnum.hpp"
#include "fusionkit/graphs.hpp"

namespace fk {

struct Table {
  std::string id, title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int unavailable_rows = 0;
  int paper_mismatches = 0;
};

// md, csv, json or text
std::string render_table(const Table& t, const std::string& format);

// trial division: "2^1 11^1 13^1 29^1"
std::string factorization(const mpz_class& n);
std::string group_digits(const std::string& digits);
std::string exact_and_decimal(const CycReal& x);

struct TableOptions {
  std::string graph;  // empty: every row
  std::string dir = data_dir();
  bool group = false;  // thousands grouping for md/text output
};

// table1 .. table5
Table build_table(const std::string& id, const TableOptions& opt = {});
nlohmann::json load_paper_table(const std::string& id, const std::string& dir = data_dir());

}  // namespace fk
