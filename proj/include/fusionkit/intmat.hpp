#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace fk {

struct IMat {
  int rows = 0, cols = 0;
  std::vector<int64_t> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}
  static IMat identity(int n);

  int64_t& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  int64_t operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

  bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const IMat& o) const { return !(*this == o); }
  bool operator<(const IMat& o) const { return a < o.a; }

  IMat transpose() const;
  IMat& operator+=(const IMat& o);
  IMat& operator-=(const IMat& o);
  friend IMat operator+(IMat x, const IMat& y) { return x += y; }
  friend IMat operator-(IMat x, const IMat& y) { return x -= y; }
  IMat scaled(int64_t s) const;

  int64_t sum() const;
  int64_t trace() const;
  bool has_negative() const;
  bool is_symmetric() const;
  bool is_zero() const;
  // (i, j) of the first negative entry, or (-1, -1)
  std::pair<int, int> first_negative() const;
};

IMat permute(const IMat& m, const std::vector<int>& perm);  // out(i,j) = m(perm[i], perm[j])

nlohmann::json to_json(const IMat& m);
IMat imat_from_json(const nlohmann::json& j);
std::string to_string(const IMat& m);

}  // namespace fk
