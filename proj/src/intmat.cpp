#include "fusionkit/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace fk {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IMat IMat::transpose() const {
  IMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IMat& IMat::operator+=(const IMat& o) {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("IMat shape mismatch");
  for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
  return *this;
}

IMat& IMat::operator-=(const IMat& o) {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("IMat shape mismatch");
  for (size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
  return *this;
}

IMat IMat::scaled(int64_t s) const {
  IMat r = *this;
  for (auto& x : r.a) x *= s;
  return r;
}

int64_t IMat::sum() const {
  int64_t s = 0;
  for (auto x : a) s += x;
  return s;
}

int64_t IMat::trace() const {
  int64_t s = 0;
  for (int i = 0; i < std::min(rows, cols); ++i) s += (*this)(i, i);
  return s;
}

bool IMat::has_negative() const {
  for (auto x : a)
    if (x < 0) return true;
  return false;
}

bool IMat::is_symmetric() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IMat::is_zero() const {
  for (auto x : a)
    if (x) return false;
  return true;
}

std::pair<int, int> IMat::first_negative() const {
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if ((*this)(i, j) < 0) return {i, j};
  return {-1, -1};
}

IMat permute(const IMat& m, const std::vector<int>& perm) {
  IMat r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r(i, j) = m(perm[i], perm[j]);
  return r;
}

nlohmann::json to_json(const IMat& m) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < m.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m(i, c));
    j.push_back(row);
  }
  return j;
}

IMat imat_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of arrays");
  int r = int(j.size());
  int c = r ? int(j[0].size()) : 0;
  IMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (!j[i].is_array() || int(j[i].size()) != c) throw std::invalid_argument("ragged matrix");
    for (int k = 0; k < c; ++k) m(i, k) = j[i][k].get<int64_t>();
  }
  return m;
}

std::string to_string(const IMat& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows; ++i) {
    os << "[";
    for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

}  // namespace fk
