#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fusionkit/intmat.hpp"

namespace fk {

// Nonnegative integer Gram factorisation M = V V^t (V has nonneg integer entries).
// Rows whose residual diagonal is 1 pin a column outright; otherwise the search branches
// on the columns through the row with the smallest positive residual diagonal.
using Column = std::vector<int64_t>;

struct GramOptions {
  uint64_t budget = 10'000'000;  // search nodes, including candidate columns tried
  int max_solutions = 1;
  std::function<bool(const std::vector<Column>&)> accept;  // optional filter on full factorisations
};

struct GramResult {
  std::vector<std::vector<Column>> solutions;
  uint64_t nodes = 0;
  bool exhausted = false;  // budget ran out before the search finished
  IMat residual;           // smallest-trace residual seen, for diagnostics
  int residual_columns = 0;
};

GramResult gram_factor(const IMat& M, const GramOptions& opt = {});

IMat columns_to_matrix(const std::vector<Column>& cols, int n);

}  // namespace fk
